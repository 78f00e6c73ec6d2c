#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "dyncut/dynamic_msf.hpp"
#include "dyncut/random.hpp"

using dyncut::DynMsf;
using dyncut::EdgeId;
using dyncut::Rng;
using dyncut::VertexId;

namespace {

struct OfflineEdge {
    VertexId u, v;
    int w;
};

// Greedy forest under (weight, EdgeId) order; the unique minimum spanning
// forest when ids break ties.
std::pair<long long, std::set<EdgeId>> greedy_forest(int n, const std::map<EdgeId, OfflineEdge>& live) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    long long weight = 0;
    std::set<EdgeId> picked;
    for (int w = 0; w <= 1; ++w)
        for (auto& [id, e] : live) {
            if (e.w != w) continue;
            int a = find(e.u), b = find(e.v);
            if (a == b) continue;
            parent[a] = b;
            picked.insert(id);
            weight += w;
        }
    return {weight, picked};
}

bool bfs_connected(int n, const std::map<EdgeId, OfflineEdge>& live, VertexId s, VertexId t) {
    std::vector<std::vector<int>> adj(n);
    for (auto& [id, e] : live) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> q{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int nb : adj[q[i]])
            if (!seen[nb]) {
                seen[nb] = 1;
                q.push_back(nb);
            }
    return seen[t];
}

}  // namespace

TEST_CASE("insert reports the forest event") {
    DynMsf m(3);
    auto ev = m.insert(0, 0, 1, 0);
    REQUIRE(ev.outcome == DynMsf::InsertOutcome::became_tree);

    // Path a-(0)-b-(1)-c; inserting (a,c,0) evicts the weight-1 edge.
    auto ev2 = m.insert(1, 1, 2, 1);
    REQUIRE(ev2.outcome == DynMsf::InsertOutcome::became_tree);
    auto ev3 = m.insert(2, 0, 2, 0);
    REQUIRE(ev3.outcome == DynMsf::InsertOutcome::swapped);
    REQUIRE(ev3.evicted == 1);
    REQUIRE(m.forest_edges() == std::vector<EdgeId>{0, 2});
    REQUIRE(m.forest_weight() == 0);

    // All-zero triangle: the closing edge stays out (path max not larger).
    DynMsf t(3);
    t.insert(0, 0, 1, 0);
    t.insert(1, 1, 2, 0);
    auto ev4 = t.insert(2, 0, 2, 0);
    REQUIRE(ev4.outcome == DynMsf::InsertOutcome::non_tree);
    REQUIRE_THROWS_AS(t.insert(2, 0, 2, 0), dyncut::duplicate_edge_error);
}

TEST_CASE("erase finds minimum-weight replacements") {
    DynMsf m(3);
    m.insert(0, 0, 1, 0);
    m.insert(1, 1, 2, 1);
    m.insert(2, 2, 0, 1);
    // Non-tree edge deleted: forest unchanged.
    REQUIRE(!m.is_tree_edge(2));
    auto before = m.forest_edges();
    REQUIRE(!m.erase(2));
    REQUIRE(m.forest_edges() == before);

    // Cycle with weights (0,1,1): deleting the weight-0 edge installs a
    // weight-1 replacement (the only edge crossing the {0} | {1,2} split).
    DynMsf c(3);
    c.insert(0, 0, 1, 0);
    c.insert(1, 1, 2, 1);
    c.insert(2, 2, 0, 1);
    auto rep = c.erase(0);
    REQUIRE(rep);
    REQUIRE(rep->id == 2);
    REQUIRE(c.weight_of(rep->id) == 1);
    REQUIRE(c.forest_weight() == 2);

    // Deleting a bridge splits the component.
    DynMsf b(2);
    b.insert(0, 0, 1, 1);
    REQUIRE(!b.erase(0));
    REQUIRE(!b.connected(0, 1));
    REQUIRE_THROWS_AS(b.erase(0), dyncut::unknown_edge_error);
}

TEST_CASE("forest accessors") {
    DynMsf m(4);
    REQUIRE(m.forest_weight() == 0);
    m.insert(0, 0, 1, 0);
    m.insert(1, 1, 2, 0);
    m.insert(2, 2, 3, 1);
    REQUIRE(m.forest_weight() == 1);
}

TEST_CASE("differential: forest equals the greedy forest after every op") {
    const int n = 200;
    const int ops = 10000;
    DynMsf m(n);
    Rng rng(31337);
    std::map<EdgeId, OfflineEdge> live;
    std::set<std::pair<int, int>> pairs;
    std::vector<EdgeId> ids;
    EdgeId next_id = 0;

    for (int i = 0; i < ops; ++i) {
        bool do_insert = ids.empty() || rng.chance(0.62);
        if (do_insert) {
            int u = static_cast<int>(rng.below(n));
            int v = static_cast<int>(rng.below(n));
            if (u == v) continue;
            auto key = std::minmax(u, v);
            if (pairs.count(key)) continue;
            int w = static_cast<int>(rng.below(2));
            EdgeId id = next_id++;
            m.insert(id, u, v, w);
            live[id] = {u, v, w};
            pairs.insert(key);
            ids.push_back(id);
        } else {
            std::size_t ix = rng.below(ids.size());
            EdgeId id = ids[ix];
            auto e = live.at(id);
            m.erase(id);
            live.erase(id);
            pairs.erase(std::minmax<int>(e.u, e.v));
            ids[ix] = ids.back();
            ids.pop_back();
        }
        auto [w, picked] = greedy_forest(n, live);
        REQUIRE(m.forest_weight() == w);
        REQUIRE(m.forest_edges() == std::vector<EdgeId>(picked.begin(), picked.end()));
    }

    // Connectivity agrees with a BFS oracle.
    for (int i = 0; i < 1000; ++i) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        REQUIRE(m.connected(u, v) == bfs_connected(n, live, u, v));
    }
}
