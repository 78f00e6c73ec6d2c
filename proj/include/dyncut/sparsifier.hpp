#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dyncut/dcs_dsf.hpp"
#include "dyncut/dsu.hpp"
#include "dyncut/engine.hpp"
#include "dyncut/errors.hpp"
#include "dyncut/graph.hpp"
#include "dyncut/multigraph.hpp"
#include "dyncut/random.hpp"

namespace dyncut {

// Parameters of the sparsifier construction: q independent 2-out contractions
// are decomposed into (delta+1)-forests, and an edge is kept out of the final
// contraction iff it shows up in at least r of the q decompositions.
//
// The defaults grew out of the acceptance harness. At desk scale the round
// count a planted minimum cut needs before it reliably collects a vote is
// nearly independent of n (a cut surviving one round with probability p needs
// about ln(1/eps)/p rounds regardless of size), so q is floored; the c1*ln(n)
// term takes over for large graphs.
struct SparsifierParams {
    double c1 = 6.0;
    double c2 = 0.02;
    int q_floor = 48;
    std::optional<int> q_override;
    std::optional<int> r_override;
    std::uint64_t seed = 1;

    std::pair<int, int> resolve(VertexId n) const {
        int q = q_override ? *q_override
                           : std::max(q_floor, static_cast<int>(std::ceil(
                                                   c1 * std::log(static_cast<double>(std::max<VertexId>(n, 2))))));
        q = std::max(q, 1);
        int r = r_override ? *r_override : static_cast<int>(std::ceil(c2 * q));
        r = std::min(std::max(r, 1), q);
        return {q, r};
    }
};

// Edge set inducing a contraction.
struct ContractionPlan {
    std::vector<Edge> edges;
};

// Vote map over the q forest decompositions: an edge is a "member" (kept out
// of the contraction) iff it was output by at least `threshold` of them.
// The ordered map makes membership O(log n) and iteration deterministic.
struct MembershipOracle {
    std::map<EdgeId, int> counts;
    int threshold = 1;

    bool member(EdgeId e) const {
        auto it = counts.find(e);
        return it != counts.end() && it->second >= threshold;
    }

    std::int64_t member_count() const {
        std::int64_t c = 0;
        for (auto& [id, k] : counts)
            if (k >= threshold) ++c;
        return c;
    }
};

struct SparsifierOutput {
    std::vector<VertexId> scope;  // vertices covered, sorted
    std::int32_t supernode_count = 0;
    std::vector<std::int32_t> supernode_of;       // size n; -1 outside scope
    std::vector<std::vector<VertexId>> members;   // per supernode, sorted
    Multigraph quotient;                          // edges carry origin EdgeIds
    MembershipOracle votes;
    int q = 0;
    int r = 0;
    int delta = 0;
    std::uint64_t seed = 0;
    std::uint64_t stack_pops = 0;  // progress counter of the contraction build
};

// Two uniform incident-edge draws per scoped vertex (independent, repetition
// allowed), deduplicated.
inline ContractionPlan sample_two_out(const DynamicSimpleGraph& g, const std::vector<VertexId>& scope, Rng& rng) {
    std::vector<EdgeId> drawn;
    drawn.reserve(2 * scope.size());
    for (VertexId v : scope) {
        if (g.degree(v) == 0) throw degenerate_input_error("two-out sampling hit an isolated vertex");
        drawn.push_back(g.sample_incident_edge(v, rng));
        drawn.push_back(g.sample_incident_edge(v, rng));
    }
    std::sort(drawn.begin(), drawn.end());
    drawn.erase(std::unique(drawn.begin(), drawn.end()), drawn.end());
    ContractionPlan plan;
    plan.edges.reserve(drawn.size());
    for (EdgeId e : drawn) plan.edges.push_back(g.edge(e));
    return plan;
}

// k-forest decomposition of the contraction of the scope induced by `plan`,
// computed with cut-set operations only. Returns the k rounds of forest
// edges; the cut-set structure is restored to its pre-call state (empty
// forest, same edge set).
inline std::vector<std::vector<Edge>> k_forest_of_contraction(DcsStructure& dcs, const ContractionPlan& plan, int k,
                                                              const std::vector<VertexId>& scope) {
    assert(dcs.f_size() == 0);
    Dsu dsu(dcs.vertex_count());
    std::vector<EdgeId> plan_forest;
    for (const Edge& e : plan.edges) {
        if (!dsu.unite(e.u, e.v)) continue;
        bool added = dcs.insert_F(e.id);
        assert(added);
        (void)added;
        plan_forest.push_back(e.id);
    }
    std::vector<VertexId> reps;
    for (VertexId v : scope)
        if (dsu.find(v) == v) reps.push_back(v);
    std::int64_t n_h = static_cast<std::int64_t>(reps.size());

    std::vector<std::vector<Edge>> rounds(k);
    std::int64_t total = 0;
    for (int i = 0; i < k; ++i) {
        std::vector<Edge>& grown = rounds[i];
        for (VertexId v : reps) {
            while (auto e = dcs.find_cutedge(v)) {
                bool added = dcs.insert_F(e->id);
                assert(added);
                (void)added;
                grown.push_back(*e);
            }
        }
        for (const Edge& e : grown) dcs.delete_G(e.id);
        total += static_cast<std::int64_t>(grown.size());
    }
    assert(total <= static_cast<std::int64_t>(k) * std::max<std::int64_t>(n_h - 1, 0));
    (void)total;
    (void)n_h;

    // What is left in F is exactly the plan forest: every grown edge was
    // deleted from the graph (and thus from F) with its round.
    for (EdgeId e : plan_forest) {
        bool removed = dcs.delete_F(e);
        assert(removed);
        (void)removed;
    }
    for (const std::vector<Edge>& round : rounds)
        for (const Edge& e : round) dcs.insert_G(e.id, e.u, e.v);
    assert(dcs.f_size() == 0);
    return rounds;
}

// Builds the contraction whose kept edges are exactly the members of the vote
// map, by churning the spanning forest: member tree edges are removed (their
// replacements re-enter the stack) until the forest spans only the contracted
// components. Everything removed is re-inserted and the forest is forced back
// to its pre-call shape.
inline SparsifierOutput build_contraction(DsfStructure& dsf, const MembershipOracle& votes,
                                          const std::vector<VertexId>& scope) {
    const VertexId n = dsf.vertex_count();
    std::vector<char> in_scope(n, 0);
    for (VertexId v : scope) in_scope[v] = 1;

    std::vector<EdgeId> forest_before = dsf.forest_snapshot();
    std::vector<Edge> stack;
    for (EdgeId id : forest_before) {
        Edge e = dsf.edge(id);
        if (in_scope[e.u]) stack.push_back(e);
    }

    std::vector<Edge> candidates;
    std::uint64_t pops = 0;
    while (!stack.empty()) {
        Edge e = stack.back();
        stack.pop_back();
        ++pops;
        if (!votes.member(e.id)) continue;  // fixed: stays in the forest
        candidates.push_back(e);
        if (auto rep = dsf.erase(e.id)) stack.push_back(*rep);
    }
    assert(pops <= static_cast<std::uint64_t>(std::max<std::int64_t>(
                       static_cast<std::int64_t>(scope.size()) - 1 + votes.member_count(), 1)));

    // Label the contracted components: remaining scoped forest edges span
    // exactly the components of the non-member subgraph.
    Dsu dsu(n);
    for (EdgeId id : dsf.forest_edges()) {
        Edge e = dsf.edge(id);
        if (in_scope[e.u]) dsu.unite(e.u, e.v);
    }
    SparsifierOutput out;
    out.scope = scope;
    out.supernode_of.assign(n, -1);
    for (VertexId v : scope) {
        VertexId root = dsu.find(v);
        if (out.supernode_of[root] < 0) {
            out.supernode_of[root] = out.supernode_count++;
            out.members.emplace_back();
        }
        out.supernode_of[v] = out.supernode_of[root];
        out.members[out.supernode_of[v]].push_back(v);
    }
    out.quotient = Multigraph(out.supernode_count);
    for (const Edge& e : candidates) {
        std::int32_t a = out.supernode_of[e.u];
        std::int32_t b = out.supernode_of[e.v];
        if (a != b) out.quotient.add_edge(a, b, e.id);
    }
    out.votes = votes;
    out.stack_pops = pops;

    for (const Edge& e : candidates) dsf.insert(e.id, e.u, e.v);
    dsf.restore_forest(forest_before);
    return out;
}

// Full pipeline over one connected scope with minimum degree `delta` >= 1.
inline SparsifierOutput build_nmc_scoped(DynamicGraphEngine& eng, const std::vector<VertexId>& scope, int delta,
                                         int q, int r, std::uint64_t seed) {
    Rng rng(seed);
    MembershipOracle votes;
    votes.threshold = r;
    for (int i = 0; i < q; ++i) {
        ContractionPlan plan = sample_two_out(eng.graph(), scope, rng);
        auto rounds = k_forest_of_contraction(eng.dcs(), plan, delta + 1, scope);
        for (const std::vector<Edge>& round : rounds)
            for (const Edge& e : round) ++votes.counts[e.id];
    }
    SparsifierOutput out = build_contraction(eng.dsf(), votes, scope);
    out.q = q;
    out.r = r;
    out.delta = delta;
    out.seed = seed;
    return out;
}

inline std::vector<VertexId> whole_vertex_scope(VertexId n) {
    std::vector<VertexId> scope(n);
    for (VertexId v = 0; v < n; ++v) scope[v] = v;
    return scope;
}

// Sparsifier of the whole (connected, min degree >= 1) graph.
inline SparsifierOutput build_nmc_sparsifier(DynamicGraphEngine& eng, const SparsifierParams& params) {
    VertexId n = eng.vertex_count();
    if (n == 0) throw degenerate_input_error("empty graph");
    if (eng.dsf().component_size(0) != n) throw disconnected_error("graph is not connected");
    int delta = eng.graph().min_degree();
    if (delta < 1) throw degenerate_input_error("minimum degree 0; use the per-component variant");
    auto [q, r] = params.resolve(n);
    return build_nmc_scoped(eng, whole_vertex_scope(n), delta, q, r, params.seed);
}

// Connected components of the current graph, each sorted, ordered by their
// smallest vertex.
inline std::vector<std::vector<VertexId>> connected_components(DynamicGraphEngine& eng) {
    VertexId n = eng.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::vector<VertexId> comp;
        eng.dsf().for_each_vertex_in_component(v, [&](VertexId x) { comp.push_back(x); });
        std::sort(comp.begin(), comp.end());
        for (VertexId x : comp) seen[x] = 1;
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Per-component variant: one sparsifier per connected component; isolated
// vertices become trivial single-supernode outputs.
inline std::vector<SparsifierOutput> build_nmc_per_component(DynamicGraphEngine& eng,
                                                             const SparsifierParams& params) {
    std::vector<SparsifierOutput> outs;
    Rng master(params.seed);
    for (const std::vector<VertexId>& comp : connected_components(eng)) {
        std::uint64_t comp_seed = master.raw();
        if (comp.size() == 1) {
            SparsifierOutput t;
            t.scope = comp;
            t.supernode_count = 1;
            t.supernode_of.assign(eng.vertex_count(), -1);
            t.supernode_of[comp[0]] = 0;
            t.members = {{comp[0]}};
            t.quotient = Multigraph(1);
            t.seed = comp_seed;
            outs.push_back(std::move(t));
            continue;
        }
        int delta = eng.graph().degree(comp[0]);
        for (VertexId v : comp) delta = std::min(delta, eng.graph().degree(v));
        auto [q, r] = params.resolve(static_cast<VertexId>(comp.size()));
        outs.push_back(build_nmc_scoped(eng, comp, delta, q, r, comp_seed));
    }
    return outs;
}

// Deterministic validity audit: recomputes the contraction naively from the
// vote map (components of the non-member subgraph) and checks that the
// supernode partition and the preserved-edge multiset match exactly.
inline void audit_contraction_validity(const DynamicSimpleGraph& g, const SparsifierOutput& out) {
    const VertexId n = g.vertex_count();
    std::vector<char> in_scope(n, 0);
    for (VertexId v : out.scope) in_scope[v] = 1;

    Dsu dsu(n);
    std::vector<Edge> member_edges;
    g.for_each_edge([&](const Edge& e) {
        if (!in_scope[e.u] || !in_scope[e.v]) return;
        if (out.votes.member(e.id))
            member_edges.push_back(e);
        else
            dsu.unite(e.u, e.v);
    });
    // A member edge is preserved iff its endpoints end up in different
    // components of the non-member subgraph.
    std::vector<Edge> preserved;
    for (const Edge& e : member_edges)
        if (!dsu.same(e.u, e.v)) preserved.push_back(e);

    // Partition equality between DSU classes and supernodes.
    std::vector<std::int32_t> super_of_root(n, -1);
    std::vector<char> root_seen(n, 0);
    for (VertexId v : out.scope) {
        VertexId root = dsu.find(v);
        std::int32_t s = out.supernode_of[v];
        if (s < 0) throw error("contraction audit: scoped vertex without supernode");
        if (!root_seen[root]) {
            root_seen[root] = 1;
            super_of_root[root] = s;
        } else if (super_of_root[root] != s) {
            throw error("contraction audit: partition mismatch");
        }
    }
    std::set<std::int32_t> distinct;
    for (VertexId v : out.scope) distinct.insert(out.supernode_of[v]);
    if (static_cast<std::int32_t>(distinct.size()) != out.supernode_count)
        throw error("contraction audit: supernode count mismatch");

    // Preserved-edge multiset equality (by origin id and endpoints' labels).
    std::multiset<std::tuple<std::int32_t, std::int32_t, EdgeId>> want, got;
    for (const Edge& e : preserved) {
        std::int32_t a = out.supernode_of[e.u];
        std::int32_t b = out.supernode_of[e.v];
        if (a == b) throw error("contraction audit: preserved edge inside a supernode");
        want.insert({std::min(a, b), std::max(a, b), e.id});
    }
    for (const Multigraph::MEdge& e : out.quotient.edges)
        got.insert({std::min(e.u, e.v), std::max(e.u, e.v), e.origin});
    if (want != got) throw error("contraction audit: preserved edge multiset mismatch");

    // Members lists agree with the label vector.
    for (std::int32_t s = 0; s < out.supernode_count; ++s)
        for (VertexId v : out.members[s])
            if (out.supernode_of[v] != s) throw error("contraction audit: member list mismatch");
}

}  // namespace dyncut
