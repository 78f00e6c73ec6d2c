#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "dyncut/applications.hpp"
#include "dyncut/engine.hpp"
#include "dyncut/errors.hpp"
#include "dyncut/oracles.hpp"
#include "dyncut/sparsifier.hpp"

namespace dyncut {

// ---------------------------------------------------------------------------
// Stream format
//
// Line-oriented ASCII. The first non-comment line fixes the vertex count:
//   n <count>
// followed by any mix of
//   i <u> <v>        insert edge
//   d <u> <v>        delete the live edge {u, v}
//   q sparsifier     build and emit the NMC sparsifier
//   q mincut         minimum-cut value plus one explicit cut
//   q mincuts        the full minimum-cut family
//   q kmax <k>       maximal k-edge-connected subgraphs
//   c <label>        checkpoint (echoed into the results)
// Blank lines and lines starting with '#' are ignored.
// ---------------------------------------------------------------------------

struct StreamEvent {
    enum class Kind { insert, erase, query_sparsifier, query_mincut, query_mincuts, query_kmax, checkpoint };
    Kind kind;
    VertexId u = -1;
    VertexId v = -1;
    int k = 0;
    std::string label;
    long line = 0;
};

struct Stream {
    VertexId n = 0;
    std::vector<StreamEvent> events;
};

inline Stream parse_stream(std::istream& in) {
    Stream s;
    bool have_n = false;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (!have_n) {
            if (tok != "n") throw parse_error("expected 'n <count>' header", line_no);
            if (!(ls >> s.n) || s.n < 0) throw parse_error("bad vertex count", line_no);
            have_n = true;
            continue;
        }
        StreamEvent ev;
        ev.line = line_no;
        if (tok == "i" || tok == "d") {
            ev.kind = tok == "i" ? StreamEvent::Kind::insert : StreamEvent::Kind::erase;
            if (!(ls >> ev.u >> ev.v)) throw parse_error("expected two vertex ids", line_no);
            if (ev.u < 0 || ev.v < 0 || ev.u >= s.n || ev.v >= s.n) throw parse_error("vertex out of range", line_no);
        } else if (tok == "q") {
            std::string what;
            if (!(ls >> what)) throw parse_error("expected query kind", line_no);
            if (what == "sparsifier")
                ev.kind = StreamEvent::Kind::query_sparsifier;
            else if (what == "mincut")
                ev.kind = StreamEvent::Kind::query_mincut;
            else if (what == "mincuts")
                ev.kind = StreamEvent::Kind::query_mincuts;
            else if (what == "kmax") {
                ev.kind = StreamEvent::Kind::query_kmax;
                if (!(ls >> ev.k) || ev.k < 1) throw parse_error("expected k >= 1", line_no);
            } else
                throw parse_error("unknown query '" + what + "'", line_no);
        } else if (tok == "c") {
            ev.kind = StreamEvent::Kind::checkpoint;
            ls >> ev.label;
        } else {
            throw parse_error("unknown command '" + tok + "'", line_no);
        }
        s.events.push_back(std::move(ev));
    }
    if (!have_n) s.n = 0;
    return s;
}

inline Stream parse_stream_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open stream file " + path);
    return parse_stream(in);
}

// ---------------------------------------------------------------------------
// Configuration: flags plus an optional key=value file.
// ---------------------------------------------------------------------------

struct WorkloadConfig {
    double c1 = SparsifierParams{}.c1;
    double c2 = SparsifierParams{}.c2;
    int q_floor = SparsifierParams{}.q_floor;
    std::uint64_t seed = 1;
    int oracle_budget = 20;
    std::int32_t enumeration_limit = 20;

    SparsifierParams sparsifier_params(std::uint64_t query_seed) const {
        SparsifierParams p;
        p.c1 = c1;
        p.c2 = c2;
        p.q_floor = q_floor;
        p.seed = query_seed;
        return p;
    }

    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw error("cannot open config file " + path);
        std::string line;
        long line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) throw parse_error("expected key=value", line_no);
            std::string key = line.substr(0, eq);
            std::string value = line.substr(eq + 1);
            if (key == "c1")
                c1 = std::stod(value);
            else if (key == "c2")
                c2 = std::stod(value);
            else if (key == "q_floor")
                q_floor = std::stoi(value);
            else if (key == "seed")
                seed = std::stoull(value);
            else if (key == "oracle_budget")
                oracle_budget = std::stoi(value);
            else
                throw parse_error("unknown config key '" + key + "'", line_no);
        }
    }
};

// ---------------------------------------------------------------------------
// Result serialization
// ---------------------------------------------------------------------------

inline void write_cut(std::ostream& os, const Cut& cut, const DynamicSimpleGraph& g) {
    os << "side";
    for (VertexId v : cut.side) os << ' ' << v;
    os << '\n';
    for (EdgeId id : cut.crossing) {
        Edge e = g.edge(id);
        os << "crossing " << std::min(e.u, e.v) << ' ' << std::max(e.u, e.v) << '\n';
    }
}

inline void write_sparsifier(std::ostream& os, const SparsifierOutput& sp, const DynamicSimpleGraph& g) {
    os << "supernodes " << sp.supernode_count << '\n';
    for (std::int32_t s = 0; s < sp.supernode_count; ++s) {
        os << "supernode " << s << ':';
        for (VertexId v : sp.members[s]) os << ' ' << v;
        os << '\n';
    }
    os << "edges " << sp.quotient.edges.size() << '\n';
    for (const Multigraph::MEdge& e : sp.quotient.edges) {
        Edge orig = g.edge(e.origin);
        os << "edge " << e.u << ' ' << e.v << ' ' << e.origin << ' ' << orig.u << ' ' << orig.v << '\n';
    }
    os << "params q=" << sp.q << " r=" << sp.r << " delta=" << sp.delta << '\n';
}

inline void write_counters(std::ostream& os, const OpCounters& d) {
    os << "counters dcs=" << d.dcs_total() << " dsf=" << d.dsf_total() << " msf=" << d.msf_total() << '\n';
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

struct RunStats {
    long inserts = 0;
    long deletes = 0;
    long queries = 0;
    double query_wall_seconds = 0;  // reported on stderr, never in results
};

inline RunStats run_stream(const Stream& stream, const WorkloadConfig& config, std::ostream& results) {
    DynamicGraphEngine eng(stream.n);
    Rng query_seeds(config.seed);
    RunStats stats;
    for (const StreamEvent& ev : stream.events) {
        try {
            switch (ev.kind) {
                case StreamEvent::Kind::insert:
                    eng.insert_edge(ev.u, ev.v);
                    ++stats.inserts;
                    break;
                case StreamEvent::Kind::erase:
                    eng.delete_edge_between(ev.u, ev.v);
                    ++stats.deletes;
                    break;
                case StreamEvent::Kind::checkpoint:
                    results << "checkpoint " << ev.label << '\n';
                    break;
                case StreamEvent::Kind::query_sparsifier: {
                    ++stats.queries;
                    OpCounters before = eng.counters();
                    auto t0 = std::chrono::steady_clock::now();
                    auto outs = build_nmc_per_component(eng, config.sparsifier_params(query_seeds.raw()));
                    stats.query_wall_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    results << "result sparsifier\ncomponents " << outs.size() << '\n';
                    for (const SparsifierOutput& sp : outs) write_sparsifier(results, sp, eng.graph());
                    write_counters(results, eng.counters() - before);
                    results << "end\n";
                    break;
                }
                case StreamEvent::Kind::query_mincut: {
                    ++stats.queries;
                    OpCounters before = eng.counters();
                    auto t0 = std::chrono::steady_clock::now();
                    auto [value, cut] = min_cut_report(eng, config.sparsifier_params(query_seeds.raw()));
                    stats.query_wall_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    results << "result mincut\nvalue " << value << '\n';
                    write_cut(results, cut, eng.graph());
                    write_counters(results, eng.counters() - before);
                    results << "end\n";
                    break;
                }
                case StreamEvent::Kind::query_mincuts: {
                    ++stats.queries;
                    OpCounters before = eng.counters();
                    auto t0 = std::chrono::steady_clock::now();
                    CutFamily fam =
                        min_cuts_of_graph(eng, config.sparsifier_params(query_seeds.raw()), config.enumeration_limit);
                    stats.query_wall_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    results << "result mincuts\nvalue " << fam.lambda << "\ncuts " << fam.cuts.size() << '\n';
                    for (std::size_t i = 0; i < fam.cuts.size(); ++i) {
                        results << "cut " << i << " trivial " << (fam.cuts[i].trivial ? 1 : 0) << '\n';
                        write_cut(results, fam.cuts[i], eng.graph());
                    }
                    write_counters(results, eng.counters() - before);
                    results << "end\n";
                    break;
                }
                case StreamEvent::Kind::query_kmax: {
                    ++stats.queries;
                    OpCounters before = eng.counters();
                    auto t0 = std::chrono::steady_clock::now();
                    auto part = maximal_k_edge_connected(eng, ev.k, config.sparsifier_params(query_seeds.raw()));
                    stats.query_wall_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    results << "result kmax k=" << ev.k << "\nclasses " << part.classes.size() << '\n';
                    for (std::size_t i = 0; i < part.classes.size(); ++i) {
                        results << "class " << i << " certified " << (part.certified[i] ? 1 : 0) << ':';
                        for (VertexId v : part.classes[i]) results << ' ' << v;
                        results << '\n';
                    }
                    write_counters(results, eng.counters() - before);
                    results << "end\n";
                    break;
                }
            }
        } catch (const error& err) {
            throw parse_error(std::string("event failed: ") + err.what(), ev.line);
        }
    }
    return stats;
}

// ---------------------------------------------------------------------------
// Generators. Each is fully determined by (model parameters, seed) and tracks
// its own live-edge set so deletions always reference live edges.
// ---------------------------------------------------------------------------

struct GenSpec {
    std::string model = "gnm";  // gnm | gnp | nearreg | planted
    VertexId n = 16;
    std::int64_t m = 0;      // gnm
    double p = 0.0;          // gnp
    int degree = 4;          // nearreg, planted (intra-cluster degree)
    int cut_size = 2;        // planted
    long churn = 0;          // delete/insert pairs appended after the build
    std::uint64_t seed = 1;
    std::vector<std::string> queries;  // appended at the end, e.g. "mincut"
};

namespace detail {

class StreamWriter {
public:
    StreamWriter(std::ostream& os, VertexId n) : os_(os), n_(n) { os_ << "n " << n << '\n'; }

    bool has(VertexId u, VertexId v) const { return live_.count(key(u, v)) != 0; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    VertexId vertex_count() const { return n_; }

    void insert(VertexId u, VertexId v) {
        os_ << "i " << u << ' ' << v << '\n';
        live_.insert(key(u, v));
        edges_.emplace_back(u, v);
    }

    void erase_random(Rng& rng) {
        if (edges_.empty()) return;
        std::size_t ix = rng.below(edges_.size());
        auto [u, v] = edges_[ix];
        os_ << "d " << u << ' ' << v << '\n';
        live_.erase(key(u, v));
        edges_[ix] = edges_.back();
        edges_.pop_back();
    }

    void insert_random_new(Rng& rng) {
        for (int attempts = 0; attempts < 1000; ++attempts) {
            VertexId u = static_cast<VertexId>(rng.below(n_));
            VertexId v = static_cast<VertexId>(rng.below(n_));
            if (u == v || has(u, v)) continue;
            insert(u, v);
            return;
        }
    }

    void query(const std::string& q) { os_ << "q " << q << '\n'; }

private:
    static std::uint64_t key(VertexId u, VertexId v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
    }

    std::ostream& os_;
    VertexId n_;
    std::set<std::uint64_t> live_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

// Near-regular simple graph on the vertex range [lo, hi): grows random edges
// between lowest-degree vertices until every degree reaches `target` or no
// legal pair remains.
inline void emit_near_regular_block(StreamWriter& w, VertexId lo, VertexId hi, int target, Rng& rng) {
    std::vector<int> degree(hi - lo, 0);
    for (;;) {
        std::vector<VertexId> open;
        for (VertexId v = lo; v < hi; ++v)
            if (degree[v - lo] < target) open.push_back(v);
        if (open.size() < 2) break;
        bool placed = false;
        for (int attempts = 0; attempts < 4000 && !placed; ++attempts) {
            VertexId u = open[rng.below(open.size())];
            VertexId v = open[rng.below(open.size())];
            if (u == v || w.has(u, v)) continue;
            w.insert(u, v);
            ++degree[u - lo];
            ++degree[v - lo];
            placed = true;
        }
        if (!placed) {
            // Dense corner: close the lowest-degree open pair deterministically.
            for (std::size_t i = 0; i < open.size() && !placed; ++i)
                for (std::size_t j = i + 1; j < open.size() && !placed; ++j)
                    if (!w.has(open[i], open[j])) {
                        w.insert(open[i], open[j]);
                        ++degree[open[i] - lo];
                        ++degree[open[j] - lo];
                        placed = true;
                    }
            if (!placed) break;
        }
    }
}

}  // namespace detail

inline void gen_stream(const GenSpec& spec, std::ostream& os) {
    Rng rng(spec.seed);
    os << "# model=" << spec.model << " seed=" << spec.seed << '\n';
    detail::StreamWriter w(os, spec.n);

    if (spec.model == "gnp") {
        for (VertexId u = 0; u < spec.n; ++u)
            for (VertexId v = u + 1; v < spec.n; ++v)
                if (rng.chance(spec.p)) w.insert(u, v);
    } else if (spec.model == "gnm") {
        std::int64_t target = std::min<std::int64_t>(spec.m, static_cast<std::int64_t>(spec.n) * (spec.n - 1) / 2);
        while (w.edge_count() < target) w.insert_random_new(rng);
    } else if (spec.model == "nearreg") {
        detail::emit_near_regular_block(w, 0, spec.n, spec.degree, rng);
    } else if (spec.model == "planted") {
        // Two near-regular clusters joined by cut_size bridge edges: the
        // planted bridge set is the unique non-trivial minimum cut as long as
        // cut_size < intra-cluster connectivity.
        VertexId half = spec.n / 2;
        detail::emit_near_regular_block(w, 0, half, spec.degree, rng);
        detail::emit_near_regular_block(w, half, spec.n, spec.degree, rng);
        std::set<std::pair<VertexId, VertexId>> used;
        int placed = 0;
        while (placed < spec.cut_size) {
            VertexId u = static_cast<VertexId>(rng.below(half));
            VertexId v = static_cast<VertexId>(half + rng.below(spec.n - half));
            if (used.count({u, v})) continue;
            used.insert({u, v});
            w.insert(u, v);
            ++placed;
        }
    } else {
        throw error("unknown generator model '" + spec.model + "'");
    }

    for (long i = 0; i < spec.churn; ++i) {
        w.erase_random(rng);
        w.insert_random_new(rng);
    }
    for (const std::string& q : spec.queries) w.query(q);
}

// ---------------------------------------------------------------------------
// Verifier: replays a stream, answering every query twice - once through the
// library and once through the brute-force oracles - and reports agreement.
// ---------------------------------------------------------------------------

struct VerifyReport {
    long checked = 0;
    long agreed = 0;
    long mismatched = 0;
    long skipped = 0;
};

inline VerifyReport verify_stream(const Stream& stream, const WorkloadConfig& config, std::ostream& report) {
    DynamicGraphEngine eng(stream.n);
    Rng query_seeds(config.seed);
    VerifyReport rep;
    oracle::Budget budget{config.oracle_budget};
    long query_no = 0;

    auto live_edges = [&]() {
        oracle::EdgeList out;
        eng.graph().for_each_edge([&](const Edge& e) { out.emplace_back(e.u, e.v); });
        return out;
    };
    auto note = [&](const std::string& what, const std::string& status) {
        report << "query " << query_no << ' ' << what << ": " << status << '\n';
    };

    for (const StreamEvent& ev : stream.events) {
        switch (ev.kind) {
            case StreamEvent::Kind::insert:
                eng.insert_edge(ev.u, ev.v);
                break;
            case StreamEvent::Kind::erase:
                eng.delete_edge_between(ev.u, ev.v);
                break;
            case StreamEvent::Kind::checkpoint:
                report << "checkpoint " << ev.label << '\n';
                break;
            case StreamEvent::Kind::query_sparsifier: {
                ++query_no;
                ++rep.checked;
                auto seed = query_seeds.raw();
                auto outs = build_nmc_per_component(eng, config.sparsifier_params(seed));
                bool valid = true;
                for (const SparsifierOutput& sp : outs) {
                    try {
                        audit_contraction_validity(eng.graph(), sp);
                    } catch (const error&) {
                        valid = false;
                    }
                }
                if (!valid) {
                    ++rep.mismatched;
                    note("sparsifier", "MISMATCH (contraction validity)");
                    break;
                }
                if (eng.vertex_count() > config.oracle_budget) {
                    ++rep.skipped;
                    note("sparsifier", "skipped: budget");
                    break;
                }
                // Preservation of every non-trivial minimum cut per component.
                long missed = 0, total = 0;
                for (const SparsifierOutput& sp : outs) {
                    if (sp.scope.size() < 4) continue;
                    std::vector<int> local(eng.vertex_count(), -1);
                    for (std::size_t i = 0; i < sp.scope.size(); ++i) local[sp.scope[i]] = static_cast<int>(i);
                    oracle::EdgeList comp_edges;
                    eng.graph().for_each_edge([&](const Edge& e) {
                        if (local[e.u] >= 0 && local[e.v] >= 0) comp_edges.emplace_back(local[e.u], local[e.v]);
                    });
                    auto fam = oracle::min_cut_family(static_cast<int>(sp.scope.size()), comp_edges, budget);
                    for (const auto& side : fam.sides) {
                        if (side.size() < 2 || side.size() + 2 > sp.scope.size()) continue;  // trivial
                        ++total;
                        std::set<std::int32_t> side_supers, other_supers;
                        std::vector<char> on(sp.scope.size(), 0);
                        for (int v : side) on[v] = 1;
                        for (std::size_t i = 0; i < sp.scope.size(); ++i)
                            (on[i] ? side_supers : other_supers).insert(sp.supernode_of[sp.scope[i]]);
                        for (std::int32_t sn : side_supers)
                            if (other_supers.count(sn)) {
                                ++missed;
                                break;
                            }
                    }
                }
                if (missed == 0) {
                    ++rep.agreed;
                    note("sparsifier", "ok (nontrivial min cuts preserved " + std::to_string(total) + "/" +
                                           std::to_string(total) + ")");
                } else {
                    ++rep.mismatched;
                    note("sparsifier", "MISMATCH (missed " + std::to_string(missed) + "/" + std::to_string(total) +
                                           " nontrivial min cuts)");
                }
                break;
            }
            case StreamEvent::Kind::query_mincut: {
                ++query_no;
                ++rep.checked;
                auto seed = query_seeds.raw();
                if (eng.vertex_count() > config.oracle_budget) {
                    min_cut_report(eng, config.sparsifier_params(seed));
                    ++rep.skipped;
                    note("mincut", "skipped: budget");
                    break;
                }
                auto [value, cut] = min_cut_report(eng, config.sparsifier_params(seed));
                auto fam = oracle::min_cut_family(eng.vertex_count(), live_edges(), budget);
                if (value == fam.lambda) {
                    ++rep.agreed;
                    note("mincut", "ok");
                } else {
                    ++rep.mismatched;
                    note("mincut", "MISMATCH (got " + std::to_string(value) + ", oracle " +
                                       std::to_string(fam.lambda) + ")");
                }
                break;
            }
            case StreamEvent::Kind::query_mincuts: {
                ++query_no;
                ++rep.checked;
                auto seed = query_seeds.raw();
                if (eng.vertex_count() > config.oracle_budget) {
                    min_cuts_of_graph(eng, config.sparsifier_params(seed), config.enumeration_limit);
                    ++rep.skipped;
                    note("mincuts", "skipped: budget");
                    break;
                }
                CutFamily fam = min_cuts_of_graph(eng, config.sparsifier_params(seed), config.enumeration_limit);
                auto ofam = oracle::min_cut_family(eng.vertex_count(), live_edges(), budget);
                std::set<std::vector<VertexId>> got, want;
                for (const Cut& c : fam.cuts) got.insert(detail::canonical_side(c.side, eng.vertex_count()));
                for (const auto& s : ofam.sides) want.insert(std::vector<VertexId>(s.begin(), s.end()));
                if (fam.lambda == ofam.lambda && got == want) {
                    ++rep.agreed;
                    note("mincuts", "ok (" + std::to_string(fam.cuts.size()) + " cuts)");
                } else {
                    ++rep.mismatched;
                    note("mincuts", "MISMATCH (value " + std::to_string(fam.lambda) + "/" +
                                        std::to_string(ofam.lambda) + ", cuts " + std::to_string(got.size()) + "/" +
                                        std::to_string(want.size()) + ")");
                }
                break;
            }
            case StreamEvent::Kind::query_kmax: {
                ++query_no;
                ++rep.checked;
                auto seed = query_seeds.raw();
                auto part = maximal_k_edge_connected(eng, ev.k, config.sparsifier_params(seed));
                if (eng.vertex_count() > config.oracle_budget) {
                    ++rep.skipped;
                    note("kmax", "skipped: budget");
                    break;
                }
                auto classes = oracle::k_subgraphs(eng.vertex_count(), live_edges(), ev.k, budget);
                std::vector<std::vector<int>> got;
                for (auto& c : part.classes) got.push_back(std::vector<int>(c.begin(), c.end()));
                std::sort(got.begin(), got.end());
                if (got == classes) {
                    ++rep.agreed;
                    note("kmax", "ok (" + std::to_string(got.size()) + " classes)");
                } else {
                    ++rep.mismatched;
                    note("kmax", "MISMATCH");
                }
                break;
            }
        }
    }
    report << "verify: checked " << rep.checked << " agreed " << rep.agreed << " mismatched " << rep.mismatched
           << " skipped " << rep.skipped << '\n';
    return rep;
}

// ---------------------------------------------------------------------------
// Bench: builds random graphs at each scale, performs updates and sparsifier
// queries, and reports operation counts and wall time per query as CSV.
// ---------------------------------------------------------------------------

struct BenchRow {
    VertexId n = 0;
    std::int64_t m = 0;
    long updates = 0;
    std::uint64_t query_dcs_ops = 0;
    std::uint64_t query_dsf_ops = 0;
    double query_wall_ms = 0;
};

inline BenchRow bench_one(VertexId n, std::int64_t m, long update_pairs, int queries, std::uint64_t seed) {
    Rng rng(seed);
    DynamicGraphEngine eng(n);
    std::vector<EdgeId> live;
    auto insert_random = [&]() {
        for (;;) {
            VertexId u = static_cast<VertexId>(rng.below(n));
            VertexId v = static_cast<VertexId>(rng.below(n));
            if (u == v || eng.graph().edge_between(u, v) != kNoEdge) continue;
            live.push_back(eng.insert_edge(u, v));
            return;
        }
    };
    // Random spanning tree first so the graph stays connected, then fill.
    for (VertexId v = 1; v < n; ++v) {
        VertexId u = static_cast<VertexId>(rng.below(v));
        live.push_back(eng.insert_edge(u, v));
    }
    while (static_cast<std::int64_t>(live.size()) < m) insert_random();

    BenchRow row;
    row.n = n;
    row.m = eng.graph().edge_count();
    for (long i = 0; i < update_pairs; ++i) {
        std::size_t ix = rng.below(live.size());
        Edge gone = eng.delete_edge(live[ix]);
        live[ix] = live.back();
        live.pop_back();
        insert_random();
        (void)gone;
        row.updates += 2;
    }
    for (int qi = 0; qi < queries; ++qi) {
        OpCounters before = eng.counters();
        auto t0 = std::chrono::steady_clock::now();
        auto outs = build_nmc_per_component(eng, [&] {
            SparsifierParams p;
            p.seed = seed + 1000 + qi;
            return p;
        }());
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        OpCounters d = eng.counters() - before;
        row.query_dcs_ops += d.dcs_total();
        row.query_dsf_ops += d.dsf_total();
        row.query_wall_ms += ms;
        (void)outs;
    }
    if (queries > 0) {
        row.query_dcs_ops /= queries;
        row.query_dsf_ops /= queries;
        row.query_wall_ms /= queries;
    }
    return row;
}

inline void bench_csv(const std::vector<VertexId>& scales, double m_exponent, long update_pairs, int queries,
                      std::uint64_t seed, std::ostream& csv) {
    csv << "n,m,updates,query_dcs_ops,query_dsf_ops,query_wall_ms\n";
    for (VertexId n : scales) {
        std::int64_t m = static_cast<std::int64_t>(std::pow(static_cast<double>(n), m_exponent));
        m = std::min<std::int64_t>(m, static_cast<std::int64_t>(n) * (n - 1) / 2);
        BenchRow row = bench_one(n, m, update_pairs, queries, seed);
        csv << row.n << ',' << row.m << ',' << row.updates << ',' << row.query_dcs_ops << ','
            << row.query_dsf_ops << ',' << row.query_wall_ms << '\n';
    }
}

}  // namespace dyncut
