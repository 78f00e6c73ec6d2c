// Command-line harness: run update/query streams, generate workloads, verify
// against brute-force oracles, and benchmark query scaling.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "dyncut/workload.hpp"

namespace {

std::unique_ptr<std::ofstream> open_out(const std::string& path) {
    auto out = std::make_unique<std::ofstream>(path);
    if (!*out) throw dyncut::error("cannot open output file " + path);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic minimum-cut sparsifier toolkit"};
    app.require_subcommand(1);

    dyncut::WorkloadConfig config;
    std::string config_file;

    auto add_config_flags = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_file, "key=value config file");
        cmd->add_option("--c1", config.c1, "rounds coefficient (q = max(q_floor, ceil(c1 ln n)))");
        cmd->add_option("--c2", config.c2, "vote threshold coefficient (r = ceil(c2 q))");
        cmd->add_option("--q-floor", config.q_floor, "minimum number of contraction rounds");
        cmd->add_option("--seed", config.seed, "seed for all query randomness");
        cmd->add_option("--oracle-budget", config.oracle_budget, "max vertices for oracle checks");
    };

    // run
    std::string run_stream_path, run_out_path;
    CLI::App* run = app.add_subcommand("run", "apply a stream and emit query results");
    run->add_option("stream", run_stream_path, "stream file")->required();
    run->add_option("-o,--output", run_out_path, "results file (default: stdout)");
    add_config_flags(run);

    // gen
    dyncut::GenSpec spec;
    std::string gen_out_path, gen_queries;
    CLI::App* gen = app.add_subcommand("gen", "generate a random workload stream");
    gen->add_option("--model", spec.model, "gnm | gnp | nearreg | planted")->required();
    gen->add_option("--n", spec.n, "vertex count")->required();
    gen->add_option("--m", spec.m, "edge count (gnm)");
    gen->add_option("--p", spec.p, "edge probability (gnp)");
    gen->add_option("--degree", spec.degree, "target degree (nearreg, planted clusters)");
    gen->add_option("--cut", spec.cut_size, "planted cut size (planted)");
    gen->add_option("--churn", spec.churn, "delete/insert pairs appended after the build");
    gen->add_option("--queries", gen_queries, "comma-separated query list appended at the end");
    gen->add_option("--seed", spec.seed, "generator seed");
    gen->add_option("-o,--output", gen_out_path, "stream file (default: stdout)");

    // verify
    std::string verify_stream_path, verify_out_path;
    CLI::App* verify = app.add_subcommand("verify", "replay a stream, checking every query against oracles");
    verify->add_option("stream", verify_stream_path, "stream file")->required();
    verify->add_option("-o,--output", verify_out_path, "report file (default: stdout)");
    add_config_flags(verify);

    // bench
    std::string bench_scales = "1000,2000,4000,8000";
    double bench_exp = 1.5;
    long bench_updates = 2000;
    int bench_queries = 2;
    std::string bench_out_path;
    std::uint64_t bench_seed = 1;
    CLI::App* bench = app.add_subcommand("bench", "measure per-query op counts and wall time across scales");
    bench->add_option("--scales", bench_scales, "comma-separated vertex counts");
    bench->add_option("--m-exponent", bench_exp, "edges ~ n^exponent");
    bench->add_option("--updates", bench_updates, "delete/insert pairs before querying");
    bench->add_option("--queries", bench_queries, "sparsifier queries per scale");
    bench->add_option("--seed", bench_seed, "bench seed");
    bench->add_option("-o,--output", bench_out_path, "CSV file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_file.empty()) config.load_file(config_file);

        if (*run) {
            dyncut::Stream stream = dyncut::parse_stream_file(run_stream_path);
            std::unique_ptr<std::ofstream> file;
            std::ostream* out = &std::cout;
            if (!run_out_path.empty()) {
                file = open_out(run_out_path);
                out = file.get();
            }
            dyncut::RunStats stats = dyncut::run_stream(stream, config, *out);
            std::cerr << "run: " << stats.inserts << " inserts, " << stats.deletes << " deletes, " << stats.queries
                      << " queries, query wall " << stats.query_wall_seconds << "s\n";
        } else if (*gen) {
            if (!gen_queries.empty()) {
                std::stringstream ss(gen_queries);
                std::string q;
                while (std::getline(ss, q, ',')) spec.queries.push_back(q);
            }
            std::unique_ptr<std::ofstream> file;
            std::ostream* out = &std::cout;
            if (!gen_out_path.empty()) {
                file = open_out(gen_out_path);
                out = file.get();
            }
            dyncut::gen_stream(spec, *out);
        } else if (*verify) {
            dyncut::Stream stream = dyncut::parse_stream_file(verify_stream_path);
            std::unique_ptr<std::ofstream> file;
            std::ostream* out = &std::cout;
            if (!verify_out_path.empty()) {
                file = open_out(verify_out_path);
                out = file.get();
            }
            dyncut::VerifyReport rep = dyncut::verify_stream(stream, config, *out);
            if (rep.mismatched > 0) return 2;
        } else if (*bench) {
            std::vector<dyncut::VertexId> scales;
            std::stringstream ss(bench_scales);
            std::string tok;
            while (std::getline(ss, tok, ',')) scales.push_back(std::stoi(tok));
            std::unique_ptr<std::ofstream> file;
            std::ostream* out = &std::cout;
            if (!bench_out_path.empty()) {
                file = open_out(bench_out_path);
                out = file.get();
            }
            dyncut::bench_csv(scales, bench_exp, bench_updates, bench_queries, bench_seed, *out);
        }
    } catch (const dyncut::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
