#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dyncut/link_cut_forest.hpp"
#include "dyncut/random.hpp"

using dyncut::LinkCutForest;
using dyncut::Rng;
using dyncut::VertexId;

namespace {

// Reference forest with explicit adjacency and O(n) path walks, mirroring the
// link/cut/evert root conventions of LinkCutForest.
struct NaiveForest {
    struct E {
        int u, v;
        long long w;
    };
    int n;
    std::map<long long, E> edges;
    std::vector<std::map<int, long long>> adj;  // neighbor -> edge key
    std::set<int> roots;
    long long next_key = 0;

    explicit NaiveForest(int n) : n(n), adj(n) {
        for (int v = 0; v < n; ++v) roots.insert(v);
    }

    std::vector<int> component(int v) const {
        std::vector<int> out{v};
        std::vector<char> seen(n, 0);
        seen[v] = 1;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (auto& [nb, k] : adj[out[i]])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    out.push_back(nb);
                }
        return out;
    }

    int root_of(int v) const {
        for (int x : component(v))
            if (roots.count(x)) return x;
        FAIL("component without root");
        return -1;
    }

    bool connected(int u, int v) const {
        auto c = component(u);
        return std::find(c.begin(), c.end(), v) != c.end();
    }

    long long link(int u, int v, long long w) {
        roots.erase(root_of(u));
        roots.erase(root_of(v));
        long long k = next_key++;
        edges[k] = {u, v, w};
        adj[u][v] = k;
        adj[v][u] = k;
        roots.insert(v);
        return k;
    }

    void cut(long long k) {
        E e = edges.at(k);
        roots.erase(root_of(e.u));
        adj[e.u].erase(e.v);
        adj[e.v].erase(e.u);
        edges.erase(k);
        // Both sides end up rooted at the cut edge's endpoints.
        roots.insert(e.u);
        roots.insert(e.v);
    }

    void evert(int v) {
        roots.erase(root_of(v));
        roots.insert(v);
    }

    // Edges on the path from the root to v, in root-to-v order.
    std::vector<long long> root_path(int v) const {
        int r = root_of(v);
        std::vector<int> par(n, -1), pare(n, -1);
        std::vector<char> seen(n, 0);
        std::deque<int> q{r};
        seen[r] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (auto& [nb, k] : adj[x])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    par[nb] = x;
                    pare[nb] = static_cast<int>(k);
                    q.push_back(nb);
                }
        }
        std::vector<long long> path;
        for (int x = v; x != r; x = par[x]) path.push_back(pare[x]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    std::optional<std::pair<long long, long long>> max_edge(int v) const {
        auto path = root_path(v);
        if (path.empty()) return std::nullopt;
        long long best = path[0];
        for (long long k : path)
            if (edges.at(k).w > edges.at(best).w) best = k;
        return std::make_pair(best, edges.at(best).w);
    }
};

}  // namespace

TEST_CASE("link, cut and evert basics") {
    LinkCutForest f(4);
    auto h01 = f.link(0, 1, 0);
    REQUIRE(f.connected(0, 1));
    REQUIRE_THROWS_AS(f.link(0, 1, 0), dyncut::cycle_error);

    f.link(1, 2, 0);
    f.link(2, 3, 0);
    REQUIRE(f.connected(0, 3));

    f.evert(2);
    REQUIRE(f.find_root(0) == 2);
    f.evert(2);
    REQUIRE(f.find_root(0) == 2);  // idempotent

    f.cut(h01);
    REQUIRE(!f.connected(0, 1));
    REQUIRE_THROWS_AS(f.cut(h01), dyncut::stale_handle_error);
    f.link(0, 1, 5);  // re-link after cut is allowed
    REQUIRE(f.connected(0, 3));
}

TEST_CASE("max_edge is tie-broken toward the root") {
    LinkCutForest f(3);
    SECTION("distinct weights") {
        f.link(0, 1, 0);
        f.link(1, 2, 1);
        f.evert(0);
        auto m = f.max_edge(2);
        REQUIRE(m);
        REQUIRE(m->second == 1);
        auto [a, b] = f.endpoints(m->first);
        REQUIRE(std::minmax(a, b) == std::minmax<VertexId>(1, 2));
        REQUIRE(!f.max_edge(0));  // root itself
    }
    SECTION("equal weights pick the edge closest to the root") {
        f.link(0, 1, 1);
        f.link(1, 2, 1);
        f.evert(0);
        auto m = f.max_edge(2);
        REQUIRE(m);
        auto [a, b] = f.endpoints(m->first);
        REQUIRE(std::minmax(a, b) == std::minmax<VertexId>(0, 1));
    }
}

TEST_CASE("parent_side identifies the endpoint nearer the root") {
    LinkCutForest f(3);
    f.link(0, 1, 0);
    auto h12 = f.link(1, 2, 0);
    f.evert(0);
    auto [closer, farther] = f.parent_side(h12);
    REQUIRE(closer == 1);
    REQUIRE(farther == 2);
    REQUIRE(f.find_root(1) == 0);
    REQUIRE(!f.connected(0, 2) == false);

    LinkCutForest g(2);
    REQUIRE(!g.connected(0, 1));
    g.evert(1);
    REQUIRE(g.find_root(1) == 1);
}

TEST_CASE("differential against a naive forest") {
    const int n = 128;
    const int ops = 10000;
    LinkCutForest f(n);
    NaiveForest nf(n);
    Rng rng(2024);
    std::map<long long, LinkCutForest::EdgeHandle> handles;
    std::vector<long long> live;

    std::uint64_t rot0 = f.rotations();
    long structural = 0;
    for (int i = 0; i < ops; ++i) {
        int choice = static_cast<int>(rng.below(10));
        if (choice < 4) {
            int u = static_cast<int>(rng.below(n));
            int v = static_cast<int>(rng.below(n));
            if (u == v) continue;
            bool conn = nf.connected(u, v);
            REQUIRE(f.connected(u, v) == conn);
            if (conn) continue;
            long long w = static_cast<long long>(rng.below(4));  // small range to force ties
            long long k = nf.link(u, v, w);
            handles[k] = f.link(u, v, w);
            live.push_back(k);
            ++structural;
        } else if (choice < 6 && !live.empty()) {
            std::size_t ix = rng.below(live.size());
            long long k = live[ix];
            nf.cut(k);
            f.cut(handles.at(k));
            handles.erase(k);
            live[ix] = live.back();
            live.pop_back();
            ++structural;
        } else if (choice == 6) {
            int v = static_cast<int>(rng.below(n));
            nf.evert(v);
            f.evert(v);
            ++structural;
        } else {
            int v = static_cast<int>(rng.below(n));
            int u = static_cast<int>(rng.below(n));
            REQUIRE(f.find_root(v) == nf.root_of(v));
            REQUIRE(f.connected(u, v) == nf.connected(u, v));
            auto expect = nf.max_edge(v);
            auto got = f.max_edge(v);
            REQUIRE(got.has_value() == expect.has_value());
            if (got) {
                REQUIRE(got->second == expect->second);
                auto [a, b] = f.endpoints(got->first);
                auto& ne = nf.edges.at(expect->first);
                REQUIRE(std::minmax(a, b) == std::minmax<VertexId>(ne.u, ne.v));
            }
            if (!live.empty()) {
                long long k = live[rng.below(live.size())];
                auto [closer, farther] = f.parent_side(handles.at(k));
                auto& ne = nf.edges.at(k);
                auto path_u = nf.root_path(ne.u).size();
                auto path_v = nf.root_path(ne.v).size();
                REQUIRE((path_u < path_v ? ne.u : ne.v) == closer);
                REQUIRE((path_u < path_v ? ne.v : ne.u) == farther);
            }
        }
    }
    (void)structural;
    // Amortized step bound: mean rotations per operation stays within a small
    // multiple of log2(n).
    double mean_rot = static_cast<double>(f.rotations() - rot0) / ops;
    REQUIRE(mean_rot <= 10.0 * std::log2(n));
}
