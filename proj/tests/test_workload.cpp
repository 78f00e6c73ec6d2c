#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "dyncut/workload.hpp"

using namespace dyncut;

TEST_CASE("stream parsing") {
    std::istringstream in(
        "# comment\n"
        "n 4\n"
        "i 0 1\n"
        "d 0 1\n"
        "q kmax 3\n"
        "c label\n");
    Stream s = parse_stream(in);
    REQUIRE(s.n == 4);
    REQUIRE(s.events.size() == 4);
    REQUIRE(s.events[2].k == 3);

    std::istringstream bad("n 3\nx 1 2\n");
    REQUIRE_THROWS_AS(parse_stream(bad), parse_error);
    std::istringstream bad2("n 3\ni 0 7\n");
    REQUIRE_THROWS_AS(parse_stream(bad2), parse_error);
    std::istringstream noheader("i 0 1\n");
    REQUIRE_THROWS_AS(parse_stream(noheader), parse_error);
}

TEST_CASE("run: triangle mincut") {
    std::istringstream in(
        "n 3\n"
        "i 0 1\n"
        "i 1 2\n"
        "i 2 0\n"
        "q mincut\n");
    Stream s = parse_stream(in);
    WorkloadConfig config;
    std::ostringstream out;
    RunStats stats = run_stream(s, config, out);
    REQUIRE(stats.queries == 1);
    REQUIRE(out.str().find("value 2") != std::string::npos);
}

TEST_CASE("run: empty stream, bad delete") {
    Stream empty;
    empty.n = 3;
    std::ostringstream out;
    run_stream(empty, {}, out);
    REQUIRE(out.str().empty());

    std::istringstream in("n 3\nd 0 1\n");
    Stream s = parse_stream(in);
    std::ostringstream out2;
    try {
        run_stream(s, {}, out2);
        FAIL("expected a parse_error");
    } catch (const parse_error& e) {
        REQUIRE(e.line_no == 2);
    }
}

TEST_CASE("run results are byte-identical for a fixed seed") {
    std::ostringstream gen_out;
    GenSpec spec;
    spec.model = "planted";
    spec.n = 12;
    spec.degree = 4;
    spec.cut_size = 2;
    spec.seed = 5;
    spec.queries = {"mincut", "sparsifier", "mincuts"};
    gen_stream(spec, gen_out);

    std::string stream_text = gen_out.str();
    WorkloadConfig config;
    config.seed = 99;
    std::string first, second;
    for (std::string* out : {&first, &second}) {
        std::istringstream in(stream_text);
        Stream s = parse_stream(in);
        std::ostringstream res;
        run_stream(s, config, res);
        *out = res.str();
    }
    REQUIRE(first == second);
    REQUIRE(!first.empty());
}

TEST_CASE("gen is deterministic and verify agrees on a planted cut") {
    GenSpec spec;
    spec.model = "planted";
    spec.n = 16;
    spec.degree = 5;
    spec.cut_size = 2;
    spec.seed = 7;
    spec.churn = 8;
    spec.queries = {"mincut", "mincuts", "sparsifier"};

    std::ostringstream a, b;
    gen_stream(spec, a);
    gen_stream(spec, b);
    REQUIRE(a.str() == b.str());

    std::istringstream in(a.str());
    Stream s = parse_stream(in);
    WorkloadConfig config;
    config.seed = 4242;
    std::ostringstream report;
    VerifyReport rep = verify_stream(s, config, report);
    REQUIRE(rep.checked == 3);
    REQUIRE(rep.mismatched == 0);
    REQUIRE(rep.agreed == 3);
}

TEST_CASE("verify skips oracle checks beyond the budget") {
    GenSpec spec;
    spec.model = "gnm";
    spec.n = 30;
    spec.m = 90;
    spec.seed = 3;
    spec.queries = {"mincut"};
    std::ostringstream gen_out;
    gen_stream(spec, gen_out);
    std::istringstream in(gen_out.str());
    Stream s = parse_stream(in);
    WorkloadConfig config;  // oracle budget 20 < 30
    std::ostringstream report;
    VerifyReport rep = verify_stream(s, config, report);
    REQUIRE(rep.skipped == 1);
    REQUIRE(report.str().find("skipped: budget") != std::string::npos);
}

TEST_CASE("bench produces one row per scale") {
    std::ostringstream csv;
    bench_csv({64, 128}, 1.4, 20, 1, 11, csv);
    std::string text = csv.str();
    REQUIRE(text.find("n,m,updates,query_dcs_ops,query_dsf_ops,query_wall_ms") == 0);
    REQUIRE(std::count(text.begin(), text.end(), '\n') == 3);
}
