#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dyncut/euler_tour_forest.hpp"
#include "dyncut/random.hpp"

using dyncut::EulerTourForest;
using dyncut::Rng;

namespace {

struct NaiveDynForest {
    int n;
    std::map<long long, std::tuple<int, int, long long>> edges;
    std::vector<std::multimap<int, long long>> adj;
    long long next_key = 0;

    explicit NaiveDynForest(int n) : n(n), adj(n) {}

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

    long long link(int u, int v, long long w) {
        long long k = next_key++;
        edges[k] = {u, v, w};
        adj[u].emplace(v, k);
        adj[v].emplace(u, k);
        return k;
    }

    void cut(long long k) {
        auto [u, v, w] = edges.at(k);
        auto drop = [&](int a, int b) {
            auto range = adj[a].equal_range(b);
            for (auto it = range.first; it != range.second; ++it)
                if (it->second == k) {
                    adj[a].erase(it);
                    return;
                }
        };
        drop(u, v);
        drop(v, u);
        edges.erase(k);
    }

    std::optional<long long> tree_max_weight(int v) const {
        std::optional<long long> best;
        for (int x : component(v))
            for (auto& [nb, k] : adj[x]) {
                long long w = std::get<2>(edges.at(k));
                if (!best || w > *best) best = w;
            }
        return best;
    }
};

}  // namespace

TEST_CASE("euler tour forest basics") {
    EulerTourForest f(4);
    REQUIRE(f.same_tree(2, 2));
    auto h = f.link(0, 1, 7);
    REQUIRE(f.tree_size(0) == 2);
    REQUIRE(f.same_tree(0, 1));
    REQUIRE_THROWS_AS(f.link(1, 0, 1), dyncut::cycle_error);

    // Star on 4 nodes; cutting one spoke leaves sizes {3, 1}.
    auto h2 = f.link(0, 2, 1);
    f.link(0, 3, 2);
    f.cut(h2);
    REQUIRE(f.tree_size(0) == 3);
    REQUIRE(f.tree_size(2) == 1);
    REQUIRE_THROWS_AS(f.cut(h2), dyncut::stale_handle_error);
    (void)h;
}

TEST_CASE("tree_max_edge") {
    EulerTourForest f(4);
    REQUIRE(!f.tree_max_edge(0));  // singleton

    f.link(0, 1, 0);
    f.link(1, 2, 1);
    f.link(2, 3, 0);
    auto m = f.tree_max_edge(3);
    REQUIRE(m);
    REQUIRE(m->second == 1);
    auto [a, b] = f.endpoints(m->first);
    REQUIRE(std::minmax(a, b) == std::minmax(1, 2));

    EulerTourForest g(3);
    g.link(0, 1, 5);
    g.link(1, 2, 5);
    auto me = g.tree_max_edge(0);
    REQUIRE(me);
    REQUIRE(me->second == 5);  // all equal: any witness, weight must agree
}

TEST_CASE("vertex keys aggregate per tree") {
    EulerTourForest f(5);
    auto h = f.link(0, 1, 0, 100);
    f.link(1, 2, 0, 101);
    REQUIRE(f.tag(h) == 100);

    REQUIRE(!f.tree_min_vertex_key(0));
    f.set_vertex_key(2, 42);
    f.set_vertex_key(0, 55);
    auto mk = f.tree_min_vertex_key(1);
    REQUIRE(mk);
    REQUIRE(mk->first == 2);
    REQUIRE(mk->second == 42);
    f.set_vertex_key(2, EulerTourForest::kNoKey);
    mk = f.tree_min_vertex_key(1);
    REQUIRE(mk);
    REQUIRE(mk->first == 0);
    REQUIRE(mk->second == 55);

    std::set<int> seen;
    f.for_each_vertex_in_tree(1, [&](int v) { seen.insert(v); });
    REQUIRE(seen == std::set<int>{0, 1, 2});
}

TEST_CASE("differential against BFS recomputation") {
    const int n = 128;
    const int ops = 10000;
    EulerTourForest f(n);
    NaiveDynForest nf(n);
    Rng rng(555);
    std::map<long long, EulerTourForest::EdgeHandle> handles;
    std::vector<long long> live;

    for (int i = 0; i < ops; ++i) {
        int choice = static_cast<int>(rng.below(10));
        if (choice < 4) {
            int u = static_cast<int>(rng.below(n));
            int v = static_cast<int>(rng.below(n));
            if (u == v) continue;
            auto cu = nf.component(u);
            bool conn = std::find(cu.begin(), cu.end(), v) != cu.end();
            REQUIRE(f.same_tree(u, v) == conn);
            if (conn) continue;
            long long w = static_cast<long long>(rng.below(3));
            long long k = nf.link(u, v, w);
            handles[k] = f.link(u, v, w);
            live.push_back(k);
        } else if (choice < 6 && !live.empty()) {
            std::size_t ix = rng.below(live.size());
            long long k = live[ix];
            nf.cut(k);
            f.cut(handles.at(k));
            handles.erase(k);
            live[ix] = live.back();
            live.pop_back();
        } else {
            int u = static_cast<int>(rng.below(n));
            int v = static_cast<int>(rng.below(n));
            auto cu = nf.component(u);
            REQUIRE(f.same_tree(u, v) == (std::find(cu.begin(), cu.end(), v) != cu.end()));
            REQUIRE(f.tree_size(u) == static_cast<int>(cu.size()));
            auto expect = nf.tree_max_weight(u);
            auto got = f.tree_max_edge(u);
            REQUIRE(got.has_value() == expect.has_value());
            if (got) REQUIRE(got->second == *expect);
        }
    }
}
