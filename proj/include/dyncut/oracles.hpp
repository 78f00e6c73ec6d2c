#pragma once

// Brute-force oracles for differential and acceptance tests. They work on
// plain edge lists only and share no code with the dynamic structures they
// check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

#include "dyncut/errors.hpp"

namespace dyncut::oracle {

struct Budget {
    int max_vertices = 20;
};

using EdgeList = std::vector<std::pair<int, int>>;

namespace detail {

inline std::vector<std::vector<int>> adjacency(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

// Connectivity of the vertices selected by `allowed`, starting anywhere.
inline bool subset_connected(const std::vector<std::vector<int>>& adj, const std::vector<char>& allowed, int count) {
    int start = -1;
    for (int v = 0; v < static_cast<int>(allowed.size()); ++v)
        if (allowed[v]) {
            start = v;
            break;
        }
    if (start < 0) return false;
    std::vector<char> seen(allowed.size(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (allowed[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == count;
}

}  // namespace detail

struct Family {
    long long lambda = 0;
    // One side per minimum cut: the side not containing vertex 0, sorted.
    std::vector<std::vector<int>> sides;
};

// All minimum cuts of a connected graph (parallel edges allowed in the edge
// list) by exhaustive enumeration of bipartitions with connected sides.
inline Family min_cut_family(int n, const EdgeList& edges, const Budget& budget = {}) {
    if (n > budget.max_vertices) throw budget_error("oracle: vertex budget exceeded");
    if (n < 2) throw degenerate_input_error("oracle: need at least two vertices");
    auto adj = detail::adjacency(n, edges);
    {
        std::vector<char> all(n, 1);
        if (!detail::subset_connected(adj, all, n)) throw disconnected_error("oracle: graph is disconnected");
    }

    Family fam;
    fam.lambda = std::numeric_limits<long long>::max();
    // Vertex 0 stays on the complement side, so each bipartition is seen once.
    for (std::uint32_t bits = 1; bits < (1u << (n - 1)); ++bits) {
        std::vector<char> side(n, 0);
        int side_count = 0;
        for (int v = 1; v < n; ++v)
            if (bits & (1u << (v - 1))) {
                side[v] = 1;
                ++side_count;
            }
        long long value = 0;
        for (auto [u, v] : edges)
            if (side[u] != side[v]) ++value;
        if (value > fam.lambda) continue;
        std::vector<char> comp(n, 0);
        for (int v = 0; v < n; ++v) comp[v] = !side[v];
        if (!detail::subset_connected(adj, side, side_count) ||
            !detail::subset_connected(adj, comp, n - side_count))
            continue;
        if (value < fam.lambda) {
            fam.lambda = value;
            fam.sides.clear();
        }
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (side[v]) vs.push_back(v);
        fam.sides.push_back(std::move(vs));
    }
    std::sort(fam.sides.begin(), fam.sides.end());
    return fam;
}

// Pairwise edge connectivity = unit-capacity max flow (BFS augmentation).
inline long long edge_connectivity(int n, const EdgeList& edges, int s, int t, const Budget& budget = {}) {
    if (n > 4 * budget.max_vertices + 64) throw budget_error("oracle: flow network too large");
    if (s == t) throw degenerate_input_error("oracle: s == t");
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> g(n);
    auto add = [&](int u, int v) {
        g[u].push_back({v, 1, static_cast<int>(g[v].size())});
        g[v].push_back({u, 1, static_cast<int>(g[u].size()) - 1});
    };
    for (auto [u, v] : edges) add(u, v);

    long long flow = 0;
    for (;;) {
        std::vector<std::pair<int, int>> pred(n, {-1, -1});
        std::queue<int> q;
        q.push(s);
        pred[s] = {s, 0};
        while (!q.empty() && pred[t].first < 0) {
            int v = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(g[v].size()); ++i)
                if (g[v][i].cap > 0 && pred[g[v][i].to].first < 0) {
                    pred[g[v][i].to] = {v, i};
                    q.push(g[v][i].to);
                }
        }
        if (pred[t].first < 0) break;
        for (int v = t; v != s;) {
            auto [pv, pi] = pred[v];
            g[pv][pi].cap -= 1;
            g[v][g[pv][pi].rev].cap += 1;
            v = pv;
        }
        ++flow;
    }
    return flow;
}

// Offline greedy forest under (weight, id) order.
struct WeightedEdge {
    long long id;
    int u, v, w;
};

inline std::pair<long long, std::set<long long>> msf(int n, std::vector<WeightedEdge> edges) {
    std::sort(edges.begin(), edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) { return std::tie(a.w, a.id) < std::tie(b.w, b.id); });
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    long long weight = 0;
    std::set<long long> picked;
    for (const WeightedEdge& e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a == b) continue;
        parent[a] = b;
        weight += e.w;
        picked.insert(e.id);
    }
    return {weight, picked};
}

// Maximal k-edge-connected subgraphs by the recursive definition: repeatedly
// remove a minimum cut of value < k and recurse on the sides.
inline std::vector<std::vector<int>> k_subgraphs(int n, const EdgeList& edges, int k, const Budget& budget = {}) {
    if (n > budget.max_vertices) throw budget_error("oracle: vertex budget exceeded");

    std::vector<std::vector<int>> classes;
    // Work items are (global vertex set, edges among them).
    std::vector<std::pair<std::vector<int>, EdgeList>> work;

    auto split_components = [&](const std::vector<int>& verts, const EdgeList& es) {
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> adj(verts.size());
        for (auto [u, v] : es) {
            adj[local[u]].push_back(local[v]);
            adj[local[v]].push_back(local[u]);
        }
        std::vector<char> seen(verts.size(), 0);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> comp{static_cast<int>(i)};
            seen[i] = 1;
            for (std::size_t j = 0; j < comp.size(); ++j)
                for (int w : adj[comp[j]])
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            std::vector<int> gverts;
            for (int x : comp) gverts.push_back(verts[x]);
            std::sort(gverts.begin(), gverts.end());
            std::vector<char> in_comp(n, 0);
            for (int x : gverts) in_comp[x] = 1;
            EdgeList ces;
            for (auto [u, v] : es)
                if (in_comp[u] && in_comp[v]) ces.emplace_back(u, v);
            work.emplace_back(std::move(gverts), std::move(ces));
        }
    };

    {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        split_components(all, edges);
    }

    while (!work.empty()) {
        auto [verts, es] = std::move(work.back());
        work.pop_back();
        if (verts.size() == 1) {
            classes.push_back(verts);
            continue;
        }
        std::vector<int> local(n, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        EdgeList les;
        for (auto [u, v] : es) les.emplace_back(local[u], local[v]);
        Family fam = min_cut_family(static_cast<int>(verts.size()), les, budget);
        if (fam.lambda >= k) {
            classes.push_back(verts);
            continue;
        }
        const std::vector<int>& lside = fam.sides.front();
        std::vector<char> on(verts.size(), 0);
        for (int v : lside) on[v] = 1;
        EdgeList kept;
        for (auto [u, v] : es)
            if (on[local[u]] == on[local[v]]) kept.emplace_back(u, v);
        split_components(verts, kept);
    }

    std::sort(classes.begin(), classes.end());
    return classes;
}

}  // namespace dyncut::oracle
