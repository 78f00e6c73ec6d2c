#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "dyncut/engine.hpp"
#include "dyncut/errors.hpp"
#include "dyncut/min_cut.hpp"
#include "dyncut/multigraph.hpp"
#include "dyncut/sparsifier.hpp"

namespace dyncut {

struct KSubgraphPartition {
    std::vector<std::vector<VertexId>> classes;  // ordered by smallest vertex
    std::vector<bool> certified;                 // passed the min-cut >= k check
};

namespace detail {

// Every reported cut is recounted against the live graph before it leaves a
// query; a mismatch means a bug, not a probabilistic failure.
inline void verify_cut(const DynamicSimpleGraph& g, const Cut& cut, std::int64_t value) {
    std::vector<char> on(g.vertex_count(), 0);
    for (VertexId v : cut.side) on[v] = 1;
    std::int64_t crossing = 0;
    g.for_each_edge([&](const Edge& e) {
        if (on[e.u] != on[e.v]) ++crossing;
    });
    if (crossing != value || static_cast<std::int64_t>(cut.crossing.size()) != value)
        throw error("reported cut fails the crossing recount");
    for (EdgeId id : cut.crossing) {
        Edge e = g.edge(id);
        if (on[e.u] == on[e.v]) throw error("reported crossing edge does not cross");
    }
}

inline Cut map_back_cut(const SparsifierOutput& sp, const std::vector<char>& on_side_supernode,
                        VertexId n) {
    Cut cut;
    for (std::int32_t s = 0; s < sp.supernode_count; ++s)
        if (on_side_supernode[s])
            cut.side.insert(cut.side.end(), sp.members[s].begin(), sp.members[s].end());
    std::sort(cut.side.begin(), cut.side.end());
    for (const Multigraph::MEdge& e : sp.quotient.edges)
        if (on_side_supernode[e.u] != on_side_supernode[e.v]) cut.crossing.push_back(e.origin);
    std::sort(cut.crossing.begin(), cut.crossing.end());
    cut.trivial = cut.side.size() == 1 || cut.side.size() == static_cast<std::size_t>(n) - 1;
    return cut;
}

inline std::vector<VertexId> canonical_side(std::vector<VertexId> side, VertexId n) {
    std::sort(side.begin(), side.end());
    if (!side.empty() && side.front() == 0) {
        std::vector<VertexId> comp;
        std::size_t i = 0;
        for (VertexId v = 0; v < n; ++v) {
            if (i < side.size() && side[i] == v)
                ++i;
            else
                comp.push_back(v);
        }
        return comp;
    }
    return side;
}

inline Cut trivial_cut_at(const DynamicSimpleGraph& g, VertexId v) {
    Cut cut;
    cut.side = {v};
    cut.crossing = g.incident_edges(v);
    std::sort(cut.crossing.begin(), cut.crossing.end());
    cut.trivial = true;
    return cut;
}

}  // namespace detail

// Exact minimum-cut value and one cut, derived from the sparsifier: if the
// sparsifier's cut is no larger than the minimum degree it maps back to the
// graph, otherwise a minimum-degree vertex is the answer.
inline std::pair<std::int64_t, Cut> min_cut_report(DynamicGraphEngine& eng, const SparsifierParams& params) {
    VertexId n = eng.vertex_count();
    if (n < 2) throw degenerate_input_error("minimum cut needs at least two vertices");
    if (eng.dsf().component_size(0) != n) throw disconnected_error("graph is not connected");
    int delta = eng.graph().min_degree();

    SparsifierOutput sp = build_nmc_sparsifier(eng, params);
    if (sp.supernode_count >= 2) {
        auto [value, side] = min_cut_exact(sp.quotient);
        if (value <= delta) {
            std::vector<char> on(sp.supernode_count, 0);
            for (std::int32_t s : side) on[s] = 1;
            Cut cut = detail::map_back_cut(sp, on, n);
            detail::verify_cut(eng.graph(), cut, value);
            return {value, cut};
        }
    }
    VertexId at = 0;
    while (eng.graph().degree(at) != delta) ++at;
    Cut cut = detail::trivial_cut_at(eng.graph(), at);
    detail::verify_cut(eng.graph(), cut, delta);
    return {delta, cut};
}

// The full minimum-cut family by the three-way comparison of the sparsifier's
// cut value against the minimum degree:
//   lambda < delta: the sparsifier's family, mapped back;
//   delta < lambda: exactly the trivial cuts at minimum-degree vertices;
//   lambda == delta: the union of both, deduplicated.
inline CutFamily min_cuts_of_graph(DynamicGraphEngine& eng, const SparsifierParams& params,
                                   std::int32_t enumeration_limit = 20) {
    VertexId n = eng.vertex_count();
    if (n < 2) throw degenerate_input_error("minimum cut needs at least two vertices");
    if (eng.dsf().component_size(0) != n) throw disconnected_error("graph is not connected");
    int delta = eng.graph().min_degree();

    SparsifierOutput sp = build_nmc_sparsifier(eng, params);
    std::int64_t lambda_hat = std::numeric_limits<std::int64_t>::max();
    MultigraphCutFamily fam_hat;
    if (sp.supernode_count >= 2) {
        fam_hat = enumerate_min_cuts(sp.quotient, enumeration_limit);
        lambda_hat = fam_hat.lambda;
    }

    CutFamily out;
    std::set<std::vector<VertexId>> seen;
    auto push = [&](Cut cut, std::int64_t value) {
        auto canon = detail::canonical_side(cut.side, n);
        if (!seen.insert(canon).second) return;
        detail::verify_cut(eng.graph(), cut, value);
        out.cuts.push_back(std::move(cut));
    };

    if (lambda_hat < delta) {
        out.lambda = lambda_hat;
        for (std::uint32_t mask : fam_hat.sides) {
            std::vector<char> on(sp.supernode_count, 0);
            for (std::int32_t s : mask_vertices(mask)) on[s] = 1;
            push(detail::map_back_cut(sp, on, n), lambda_hat);
        }
    } else if (delta < lambda_hat) {
        out.lambda = delta;
        for (VertexId v = 0; v < n; ++v)
            if (eng.graph().degree(v) == delta) push(detail::trivial_cut_at(eng.graph(), v), delta);
    } else {
        out.lambda = delta;
        for (std::uint32_t mask : fam_hat.sides) {
            std::vector<char> on(sp.supernode_count, 0);
            for (std::int32_t s : mask_vertices(mask)) on[s] = 1;
            push(detail::map_back_cut(sp, on, n), delta);
        }
        for (VertexId v = 0; v < n; ++v)
            if (eng.graph().degree(v) == delta) push(detail::trivial_cut_at(eng.graph(), v), delta);
    }
    return out;
}

// Maximal k-edge-connected subgraphs, computed on the live structures:
// vertices of degree < k peel off as singletons, and each remaining component
// either certifies (its sparsified minimum cut is >= k) or loses a cut of
// value < k and is reprocessed. Every deletion is logged and rolled back
// before returning. With exact_cuts set, each component's cut is computed on
// its exact induced multigraph instead of the sparsifier (deterministic).
inline KSubgraphPartition maximal_k_edge_connected(DynamicGraphEngine& eng, int k, const SparsifierParams& params,
                                                   bool exact_cuts = false) {
    if (k < 1) throw error("k must be positive");
    const VertexId n = eng.vertex_count();
    DynamicSimpleGraph& g = eng.graph();

    std::vector<EdgeId> forest_before = eng.dsf().forest_snapshot();
    std::vector<Edge> log;
    std::vector<char> done(n, 0);
    std::deque<VertexId> peel;
    std::vector<char> queued(n, 1);
    for (VertexId v = 0; v < n; ++v) peel.push_back(v);

    Rng master(params.seed);
    KSubgraphPartition out;

    auto remove_edge = [&](EdgeId id) {
        Edge e = eng.delete_edge(id);
        log.push_back(e);
        for (VertexId x : {e.u, e.v})
            if (!queued[x]) {
                queued[x] = 1;
                peel.push_back(x);
            }
    };

    for (;;) {
        while (!peel.empty()) {
            VertexId v = peel.front();
            peel.pop_front();
            queued[v] = 0;
            if (done[v]) continue;
            int d = g.degree(v);
            if (d == 0 || d >= k) continue;
            for (EdgeId id : g.incident_edges(v)) remove_edge(id);
        }

        VertexId pick = -1;
        for (VertexId v = 0; v < n; ++v)
            if (!done[v] && g.degree(v) > 0) {
                pick = v;
                break;
            }
        if (pick < 0) break;

        std::vector<VertexId> comp;
        eng.dsf().for_each_vertex_in_component(pick, [&](VertexId x) { comp.push_back(x); });
        std::sort(comp.begin(), comp.end());
        assert(comp.size() >= 2);

        std::int64_t value = std::numeric_limits<std::int64_t>::max();
        std::vector<EdgeId> crossing;
        std::vector<std::int64_t> side_sizes;
        if (exact_cuts) {
            std::vector<std::int32_t> local(n, -1);
            for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<std::int32_t>(i);
            Multigraph mg(static_cast<std::int32_t>(comp.size()));
            for (VertexId v : comp)
                for (EdgeId id : g.incident_edges(v)) {
                    Edge e = g.edge(id);
                    if (e.u == v) mg.add_edge(local[e.u], local[e.v], id);  // once per edge
                }
            auto [val, side] = min_cut_exact(mg);
            value = val;
            std::vector<char> on(mg.n, 0);
            for (std::int32_t s : side) on[s] = 1;
            for (const auto& e : mg.edges)
                if (on[e.u] != on[e.v]) crossing.push_back(e.origin);
            side_sizes = {static_cast<std::int64_t>(side.size()),
                          static_cast<std::int64_t>(comp.size() - side.size())};
        } else {
            int delta_c = g.degree(comp[0]);
            for (VertexId v : comp) delta_c = std::min(delta_c, g.degree(v));
            assert(delta_c >= k);
            auto [q, r] = params.resolve(static_cast<VertexId>(comp.size()));
            SparsifierOutput sp = build_nmc_scoped(eng, comp, delta_c, q, r, master.raw());
            if (sp.supernode_count >= 2) {
                auto [val, side] = min_cut_exact(sp.quotient);
                if (val < k) {
                    value = val;
                    std::vector<char> on(sp.supernode_count, 0);
                    for (std::int32_t s : side) on[s] = 1;
                    std::int64_t sz = 0;
                    for (std::int32_t s = 0; s < sp.supernode_count; ++s)
                        if (on[s]) sz += static_cast<std::int64_t>(sp.members[s].size());
                    side_sizes = {sz, static_cast<std::int64_t>(comp.size()) - sz};
                    for (const auto& e : sp.quotient.edges)
                        if (on[e.u] != on[e.v]) crossing.push_back(e.origin);
                }
            }
        }

        if (value >= k) {
            for (VertexId v : comp) done[v] = 1;
            out.classes.push_back(comp);
            out.certified.push_back(true);
        } else {
            assert(static_cast<std::int64_t>(crossing.size()) == value);
            // In a simple component of minimum degree >= k, a cut smaller
            // than k leaves at least k vertices on each side.
            assert(side_sizes[0] >= k && side_sizes[1] >= k);
            (void)side_sizes;
            for (EdgeId id : crossing) remove_edge(id);
        }
    }

    for (VertexId v = 0; v < n; ++v)
        if (!done[v]) {
            out.classes.push_back({v});
            out.certified.push_back(false);
        }

    for (auto it = log.rbegin(); it != log.rend(); ++it) eng.restore_edge(*it);
    eng.dsf().restore_forest(forest_before);

    std::vector<std::size_t> order(out.classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.classes[a][0] < out.classes[b][0]; });
    KSubgraphPartition sorted;
    for (std::size_t i : order) {
        sorted.classes.push_back(std::move(out.classes[i]));
        sorted.certified.push_back(out.certified[i]);
    }
    return sorted;
}

// Reduction from multigraphs to simple graphs for maximal k-edge-connected
// subgraph queries: vertex pairs joined by >= k parallel edges are contracted
// to a fixpoint, every remaining vertex becomes a (k+1)-clique, and each
// bundle of l < k parallel edges is routed through l distinct clique-vertex
// pairs.
struct GadgetResult {
    std::int32_t n = 0;                            // gadget vertex count
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;
    std::vector<std::int32_t> class_of;            // original vertex -> clique index
    std::int32_t clique_size = 0;

    std::int32_t clique_base(std::int32_t cls) const { return cls * clique_size; }
};

inline GadgetResult multigraph_to_simple_gadget(const Multigraph& mg, int k) {
    if (k < 1) throw error("k must be positive");
    Dsu dsu(mg.n);
    for (bool changed = true; changed;) {
        changed = false;
        std::map<std::pair<std::int32_t, std::int32_t>, std::int64_t> cnt;
        for (const auto& e : mg.edges) {
            std::int32_t a = dsu.find(e.u);
            std::int32_t b = dsu.find(e.v);
            if (a == b) continue;
            ++cnt[std::minmax(a, b)];
        }
        for (auto& [pair, c] : cnt)
            if (c >= k && dsu.unite(pair.first, pair.second)) changed = true;
    }

    GadgetResult out;
    out.clique_size = k + 1;
    out.class_of.assign(mg.n, -1);
    std::int32_t classes = 0;
    for (std::int32_t v = 0; v < mg.n; ++v) {
        std::int32_t root = dsu.find(v);
        if (out.class_of[root] < 0) out.class_of[root] = classes++;
        out.class_of[v] = out.class_of[root];
    }
    out.n = classes * out.clique_size;
    for (std::int32_t c = 0; c < classes; ++c) {
        std::int32_t base = out.clique_base(c);
        for (std::int32_t i = 0; i < out.clique_size; ++i)
            for (std::int32_t j = i + 1; j < out.clique_size; ++j) out.edges.emplace_back(base + i, base + j);
    }
    std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> used;
    for (const auto& e : mg.edges) {
        std::int32_t a = out.class_of[e.u];
        std::int32_t b = out.class_of[e.v];
        if (a == b) continue;
        std::int32_t slot = used[std::minmax(a, b)]++;
        assert(slot < k);
        out.edges.emplace_back(out.clique_base(a) + slot, out.clique_base(b) + slot);
    }
    return out;
}

}  // namespace dyncut
