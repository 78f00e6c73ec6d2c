#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dyncut/errors.hpp"
#include "dyncut/random.hpp"
#include "dyncut/sampled_list.hpp"

namespace dyncut {

using VertexId = std::int32_t;
using EdgeId = std::int64_t;

inline constexpr EdgeId kNoEdge = -1;

struct Edge {
    EdgeId id = kNoEdge;
    VertexId u = -1;
    VertexId v = -1;
};

// Mutable simple graph over a fixed vertex set. Edge identifiers are assigned
// monotonically and never handed out twice; adjacency lists are SampledLists
// so incident edges can be drawn uniformly at random in O(log n).
class DynamicSimpleGraph {
public:
    explicit DynamicSimpleGraph(VertexId n) : adjacency_(n), degree_(n, 0) {}

    static DynamicSimpleGraph from_edge_list(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
        DynamicSimpleGraph g(n);
        for (auto [u, v] : edges) g.insert_edge(u, v);
        return g;
    }

    VertexId vertex_count() const { return static_cast<VertexId>(adjacency_.size()); }
    std::int64_t edge_count() const { return live_edges_; }

    EdgeId insert_edge(VertexId u, VertexId v) {
        EdgeId id = static_cast<EdgeId>(records_.size());
        insert_at(id, u, v);
        records_.resize(id + 1);
        commit(id, u, v);
        return id;
    }

    // Restores a previously deleted edge under its original identifier. Used
    // by query rollback; fresh insertions always go through insert_edge.
    void insert_edge_with_id(EdgeId id, VertexId u, VertexId v) {
        if (id < 0 || id >= static_cast<EdgeId>(records_.size()) || records_[id].live)
            throw error("insert_edge_with_id: id not restorable");
        insert_at(id, u, v);
        commit(id, u, v);
    }

    Edge delete_edge(EdgeId id) {
        const Rec& r = rec(id);
        Edge out{id, r.u, r.v};
        pair_index_.erase(pair_key(r.u, r.v));
        adjacency_[r.u].remove(r.hu);
        adjacency_[r.v].remove(r.hv);
        --degree_[r.u];
        --degree_[r.v];
        records_[id].live = false;
        --live_edges_;
        return out;
    }

    bool has_edge(EdgeId id) const {
        return id >= 0 && id < static_cast<EdgeId>(records_.size()) && records_[id].live;
    }

    Edge edge(EdgeId id) const {
        const Rec& r = rec(id);
        return Edge{id, r.u, r.v};
    }

    EdgeId edge_between(VertexId u, VertexId v) const {
        auto it = pair_index_.find(pair_key(u, v));
        return it == pair_index_.end() ? kNoEdge : it->second;
    }

    int degree(VertexId v) const { return degree_[v]; }

    int min_degree() const {
        if (adjacency_.empty()) return 0;
        int m = degree_[0];
        for (VertexId v = 1; v < vertex_count(); ++v) m = std::min(m, degree_[v]);
        return m;
    }

    EdgeId sample_incident_edge(VertexId v, Rng& rng) const {
        if (degree_[v] == 0) throw empty_list_error("sample_incident_edge: isolated vertex");
        return adjacency_[v].sample(rng);
    }

    std::vector<EdgeId> incident_edges(VertexId v) const { return adjacency_[v].items_in_order(); }

    template <class Fn>
    void for_each_edge(Fn&& fn) const {
        for (EdgeId id = 0; id < static_cast<EdgeId>(records_.size()); ++id)
            if (records_[id].live) fn(Edge{id, records_[id].u, records_[id].v});
    }

    std::vector<Edge> edges_sorted_by_id() const {
        std::vector<Edge> out;
        out.reserve(live_edges_);
        for_each_edge([&](const Edge& e) { out.push_back(e); });
        return out;
    }

    // Canonical text form: one "u v" per line with u < v, lines sorted.
    void serialize_edge_list(std::ostream& os) const {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        pairs.reserve(live_edges_);
        for_each_edge([&](const Edge& e) { pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v)); });
        std::sort(pairs.begin(), pairs.end());
        for (auto [a, b] : pairs) os << a << ' ' << b << '\n';
    }

    // Consistency walk: adjacency lists, edge records and degrees must agree.
    void audit() const {
        std::vector<std::int64_t> deg(vertex_count(), 0);
        std::int64_t live = 0;
        for (EdgeId id = 0; id < static_cast<EdgeId>(records_.size()); ++id) {
            const Rec& r = records_[id];
            if (!r.live) continue;
            ++live;
            ++deg[r.u];
            ++deg[r.v];
            if (adjacency_[r.u].get(r.hu) != id || adjacency_[r.v].get(r.hv) != id)
                throw error("graph audit: adjacency handle mismatch");
            auto it = pair_index_.find(pair_key(r.u, r.v));
            if (it == pair_index_.end() || it->second != id) throw error("graph audit: pair index mismatch");
        }
        if (live != live_edges_) throw error("graph audit: live count");
        for (VertexId v = 0; v < vertex_count(); ++v) {
            if (deg[v] != degree_[v] || degree_[v] != adjacency_[v].size()) throw error("graph audit: degree mismatch");
            adjacency_[v].audit();
        }
    }

private:
    struct Rec {
        VertexId u = -1;
        VertexId v = -1;
        SampledList<EdgeId>::Handle hu;
        SampledList<EdgeId>::Handle hv;
        bool live = false;
    };

    const Rec& rec(EdgeId id) const {
        if (!has_edge(id)) throw unknown_edge_error("unknown edge id " + std::to_string(id));
        return records_[id];
    }

    static std::uint64_t pair_key(VertexId u, VertexId v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
    }

    void insert_at(EdgeId id, VertexId u, VertexId v) {
        if (u == v) throw self_loop_error("self loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) throw error("vertex out of range");
        if (pair_index_.count(pair_key(u, v)))
            throw duplicate_edge_error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} already live");
        (void)id;
    }

    void commit(EdgeId id, VertexId u, VertexId v) {
        Rec& r = records_[id];
        r.u = u;
        r.v = v;
        r.hu = adjacency_[u].append(id);
        r.hv = adjacency_[v].append(id);
        r.live = true;
        ++degree_[u];
        ++degree_[v];
        pair_index_[pair_key(u, v)] = id;
        ++live_edges_;
    }

    std::vector<Rec> records_;
    std::vector<SampledList<EdgeId>> adjacency_;
    std::vector<int> degree_;
    std::unordered_map<std::uint64_t, EdgeId> pair_index_;
    std::int64_t live_edges_ = 0;
};

}  // namespace dyncut
