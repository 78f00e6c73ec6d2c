#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "dyncut/errors.hpp"
#include "dyncut/graph.hpp"

namespace dyncut {

// Dynamic forest keyed by Euler-tour order (splay-backed sequences).
//
// Every tree edge appears as two arc nodes in the tour; every vertex has one
// permanent vertex node. Arc nodes carry an edge weight, vertex nodes carry a
// user key; the tour aggregates expose, per tree: vertex count,
// maximum-weight edge (with witness) and minimum vertex key (with witness).
// Witnesses are the leftmost match in tour order, so queries are
// deterministic for a fixed structure state.
class EulerTourForest {
public:
    struct EdgeHandle {
        std::int32_t slot = -1;
        std::uint32_t gen = 0;
    };

    static constexpr std::int64_t kNoWeight = std::numeric_limits<std::int64_t>::min();
    static constexpr std::uint64_t kNoKey = std::numeric_limits<std::uint64_t>::max();

    explicit EulerTourForest(VertexId n) : nvertices_(n) {
        nodes_.reserve(2 * static_cast<std::size_t>(n));
        for (VertexId v = 0; v < n; ++v) {
            nodes_.emplace_back();
            nodes_.back().vertex = v;
            pull(v);
        }
    }

    VertexId vertex_count() const { return nvertices_; }

    bool same_tree(VertexId u, VertexId v) {
        if (u == v) return true;
        splay(u);
        splay(v);
        return nodes_[u].p >= 0;
    }

    EdgeHandle link(VertexId u, VertexId v, std::int64_t w, std::int64_t tag = -1) {
        if (same_tree(u, v)) throw cycle_error("link would close a cycle");
        return link_unchecked(u, v, w, tag);
    }

    // Same as link, but the caller guarantees u and v are in different trees.
    EdgeHandle link_unchecked(VertexId u, VertexId v, std::int64_t w, std::int64_t tag = -1) {
        std::int32_t slot = alloc_edge(u, v, w, tag);
        std::int32_t su = reroot_tour(u);
        std::int32_t sv = reroot_tour(v);
        std::int32_t seq = join(su, edges_[slot].arc_uv);
        seq = join(seq, sv);
        join(seq, edges_[slot].arc_vu);
        return EdgeHandle{slot, edges_[slot].gen};
    }

    void cut(EdgeHandle h) {
        std::int32_t slot = checked(h);
        std::int32_t x = edges_[slot].arc_uv;
        std::int32_t y = edges_[slot].arc_vu;
        if (position(x) > position(y)) std::swap(x, y);
        std::int32_t p = split_before(x).first;
        split_after(x);
        std::int32_t q = split_before(y).first;
        std::int32_t r = split_after(y).second;
        assert(q >= 0);  // the far side always holds at least one vertex
        (void)q;
        join(p, r);
        free_edge(slot);
    }

    std::int32_t tree_size(VertexId v) {
        splay(v);
        return nodes_[v].vcnt;
    }

    std::optional<std::pair<EdgeHandle, std::int64_t>> tree_max_edge(VertexId v) {
        splay(v);
        if (nodes_[v].agg_maxw == kNoWeight) return std::nullopt;
        std::int32_t arc = nodes_[v].agg_maxw_at;
        std::int32_t slot = nodes_[arc].edge_slot;
        return std::make_pair(EdgeHandle{slot, edges_[slot].gen}, nodes_[v].agg_maxw);
    }

    void set_vertex_key(VertexId v, std::uint64_t key) {
        splay(v);
        nodes_[v].vkey = key;
        pull(v);
    }

    std::uint64_t vertex_key(VertexId v) const { return nodes_[v].vkey; }

    std::optional<std::pair<VertexId, std::uint64_t>> tree_min_vertex_key(VertexId v) {
        splay(v);
        if (nodes_[v].agg_minvkey == kNoKey) return std::nullopt;
        return std::make_pair(nodes_[nodes_[v].agg_minvkey_at].vertex, nodes_[v].agg_minvkey);
    }

    template <class Fn>
    void for_each_vertex_in_tree(VertexId v, Fn&& fn) {
        splay(v);
        // Iterative in-order walk; read-only, no rebalancing needed.
        std::vector<std::int32_t> stack;
        std::int32_t cur = v;
        while (cur >= 0 || !stack.empty()) {
            while (cur >= 0) {
                stack.push_back(cur);
                cur = nodes_[cur].l;
            }
            cur = stack.back();
            stack.pop_back();
            if (nodes_[cur].vertex >= 0) fn(nodes_[cur].vertex);
            cur = nodes_[cur].r;
        }
    }

    std::pair<VertexId, VertexId> endpoints(EdgeHandle h) {
        std::int32_t slot = checked(h);
        return {edges_[slot].u, edges_[slot].v};
    }

    std::int64_t tag(EdgeHandle h) { return edges_[checked(h)].tag; }

    bool live(EdgeHandle h) const {
        return h.slot >= 0 && h.slot < static_cast<std::int32_t>(edges_.size()) && edges_[h.slot].gen == h.gen &&
               edges_[h.slot].live;
    }

private:
    struct Node {
        std::int32_t l = -1;
        std::int32_t r = -1;
        std::int32_t p = -1;
        std::int32_t cnt = 1;
        std::int32_t vcnt = 0;
        VertexId vertex = -1;         // >= 0 for vertex nodes
        std::int32_t edge_slot = -1;  // >= 0 for arc nodes
        std::int64_t w = kNoWeight;   // arc nodes
        std::uint64_t vkey = kNoKey;  // vertex nodes
        std::int64_t agg_maxw = kNoWeight;
        std::int32_t agg_maxw_at = -1;
        std::uint64_t agg_minvkey = kNoKey;
        std::int32_t agg_minvkey_at = -1;
    };

    struct EdgeRec {
        std::int32_t arc_uv = -1;
        std::int32_t arc_vu = -1;
        VertexId u = -1;
        VertexId v = -1;
        std::int64_t tag = -1;
        std::uint32_t gen = 0;
        bool live = false;
    };

    std::int32_t checked(EdgeHandle h) const {
        if (!live(h)) throw stale_handle_error("stale forest-edge handle");
        return h.slot;
    }

    std::int32_t alloc_node() {
        std::int32_t x;
        if (!free_nodes_.empty()) {
            x = free_nodes_.back();
            free_nodes_.pop_back();
        } else {
            x = static_cast<std::int32_t>(nodes_.size());
            nodes_.emplace_back();
        }
        Node& n = nodes_[x];
        n.l = n.r = n.p = -1;
        n.vertex = -1;
        n.edge_slot = -1;
        n.w = kNoWeight;
        n.vkey = kNoKey;
        return x;
    }

    std::int32_t alloc_edge(VertexId u, VertexId v, std::int64_t w, std::int64_t tag) {
        std::int32_t slot;
        if (!free_edges_.empty()) {
            slot = free_edges_.back();
            free_edges_.pop_back();
        } else {
            slot = static_cast<std::int32_t>(edges_.size());
            edges_.emplace_back();
        }
        EdgeRec& e = edges_[slot];
        e.arc_uv = alloc_node();
        e.arc_vu = alloc_node();
        e.u = u;
        e.v = v;
        e.tag = tag;
        e.live = true;
        for (std::int32_t arc : {e.arc_uv, e.arc_vu}) {
            nodes_[arc].edge_slot = slot;
            nodes_[arc].w = w;
            pull(arc);
        }
        return slot;
    }

    void free_edge(std::int32_t slot) {
        EdgeRec& e = edges_[slot];
        free_nodes_.push_back(e.arc_uv);
        free_nodes_.push_back(e.arc_vu);
        e.live = false;
        ++e.gen;
        free_edges_.push_back(slot);
    }

    void pull(std::int32_t x) {
        Node& n = nodes_[x];
        n.cnt = 1;
        n.vcnt = n.vertex >= 0 ? 1 : 0;
        n.agg_maxw = n.edge_slot >= 0 ? n.w : kNoWeight;
        n.agg_maxw_at = n.edge_slot >= 0 ? x : -1;
        n.agg_minvkey = n.vertex >= 0 ? n.vkey : kNoKey;
        n.agg_minvkey_at = n.vertex >= 0 ? x : -1;
        for (std::int32_t c : {n.l, n.r}) {
            if (c < 0) continue;
            const Node& cn = nodes_[c];
            n.cnt += cn.cnt;
            n.vcnt += cn.vcnt;
            bool left = (c == n.l);
            if (cn.agg_maxw != kNoWeight && (cn.agg_maxw > n.agg_maxw || (left && cn.agg_maxw == n.agg_maxw))) {
                n.agg_maxw = cn.agg_maxw;
                n.agg_maxw_at = cn.agg_maxw_at;
            }
            if (cn.agg_minvkey != kNoKey &&
                (cn.agg_minvkey < n.agg_minvkey || (left && cn.agg_minvkey == n.agg_minvkey))) {
                n.agg_minvkey = cn.agg_minvkey;
                n.agg_minvkey_at = cn.agg_minvkey_at;
            }
        }
    }

    int dir(std::int32_t x) const {
        std::int32_t p = nodes_[x].p;
        if (p < 0) return -1;
        return nodes_[p].l == x ? 0 : 1;
    }

    void rotate(std::int32_t x) {
        std::int32_t y = nodes_[x].p;
        std::int32_t z = nodes_[y].p;
        int dx = dir(x);
        int dy = dir(y);
        std::int32_t mid = dx == 0 ? nodes_[x].r : nodes_[x].l;
        (dx == 0 ? nodes_[y].l : nodes_[y].r) = mid;
        if (mid >= 0) nodes_[mid].p = y;
        (dx == 0 ? nodes_[x].r : nodes_[x].l) = y;
        nodes_[y].p = x;
        nodes_[x].p = z;
        if (dy == 0)
            nodes_[z].l = x;
        else if (dy == 1)
            nodes_[z].r = x;
        pull(y);
        pull(x);
    }

    void splay(std::int32_t x) {
        while (nodes_[x].p >= 0) {
            std::int32_t y = nodes_[x].p;
            if (nodes_[y].p < 0) {
                rotate(x);
            } else {
                if (dir(x) == dir(y))
                    rotate(y);
                else
                    rotate(x);
                rotate(x);
            }
        }
    }

    std::int64_t position(std::int32_t x) {
        splay(x);
        return nodes_[x].l >= 0 ? nodes_[nodes_[x].l].cnt : 0;
    }

    // Join two sequences (either may be -1); returns a node of the result.
    std::int32_t join(std::int32_t a, std::int32_t b) {
        if (a < 0) return b;
        if (b < 0) return a;
        splay(a);
        while (nodes_[a].r >= 0) a = nodes_[a].r;
        splay(a);
        splay(b);
        nodes_[a].r = b;
        nodes_[b].p = a;
        pull(a);
        return a;
    }

    // Splits into (everything before x, sequence starting at x).
    std::pair<std::int32_t, std::int32_t> split_before(std::int32_t x) {
        splay(x);
        std::int32_t l = nodes_[x].l;
        if (l >= 0) {
            nodes_[l].p = -1;
            nodes_[x].l = -1;
            pull(x);
        }
        return {l, x};
    }

    // Splits into (sequence ending at x, everything after x).
    std::pair<std::int32_t, std::int32_t> split_after(std::int32_t x) {
        splay(x);
        std::int32_t r = nodes_[x].r;
        if (r >= 0) {
            nodes_[r].p = -1;
            nodes_[x].r = -1;
            pull(x);
        }
        return {x, r};
    }

    // Rotate the circular tour so it starts at v's vertex node.
    std::int32_t reroot_tour(VertexId v) {
        auto [a, b] = split_before(v);
        return join(b, a);
    }

    std::vector<Node> nodes_;
    std::vector<EdgeRec> edges_;
    std::vector<std::int32_t> free_nodes_;
    std::vector<std::int32_t> free_edges_;
    VertexId nvertices_;
};

}  // namespace dyncut
