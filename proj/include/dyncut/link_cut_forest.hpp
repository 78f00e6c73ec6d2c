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

// Rooted dynamic trees (splay-based) with reroot, link, cut and root-to-vertex
// path maximum queries. Weights live on explicit edge nodes that subdivide
// each tree edge, so vertex nodes never carry a weight of their own.
//
// Path queries are interpreted from the current root of each tree; evert()
// changes it. Among equal path maxima, max_edge returns the edge closest to
// the root.
class LinkCutForest {
public:
    struct EdgeHandle {
        std::int32_t slot = -1;
        std::uint32_t gen = 0;
    };

    static constexpr std::int64_t kNoWeight = std::numeric_limits<std::int64_t>::min();

    explicit LinkCutForest(VertexId n) : nvertices_(n) {
        nodes_.reserve(2 * static_cast<std::size_t>(n));
        for (VertexId v = 0; v < n; ++v) {
            nodes_.emplace_back();
            nodes_.back().vertex = v;
        }
    }

    VertexId vertex_count() const { return nvertices_; }

    bool connected(VertexId u, VertexId v) {
        if (u == v) return true;
        return find_root(u) == find_root(v);
    }

    // After link(u, v, .), v is the root of the merged tree.
    EdgeHandle link(VertexId u, VertexId v, std::int64_t w) {
        if (connected(u, v)) throw cycle_error("link would close a cycle");
        return link_unchecked(u, v, w);
    }

    // Same as link, but the caller guarantees u and v are in different trees.
    EdgeHandle link_unchecked(VertexId u, VertexId v, std::int64_t w) {
        std::int32_t e = alloc_edge(u, v, w);
        evert(u);
        evert(v);
        nodes_[u].p = e;
        nodes_[e].p = v;
        return EdgeHandle{e, nodes_[e].gen};
    }

    // After cut, the two sides are rooted at the cut edge's endpoints.
    void cut(EdgeHandle h) {
        std::int32_t e = checked(h);
        auto [a, b] = edge_ends(e);
        evert(a);
        expose(b);
        splay(e);
        push(e);
        std::int32_t l = nodes_[e].l;
        std::int32_t r = nodes_[e].r;
        if (l >= 0) nodes_[l].p = -1;
        if (r >= 0) nodes_[r].p = -1;
        nodes_[e].l = nodes_[e].r = -1;
        free_edge(e);
    }

    void evert(VertexId v) {
        expose(v);
        nodes_[v].flip ^= 1;
        push(v);
    }

    VertexId find_root(VertexId v) {
        expose(v);
        std::int32_t cur = v;
        push(cur);
        while (nodes_[cur].l >= 0) {
            cur = nodes_[cur].l;
            push(cur);
        }
        splay(cur);
        assert(nodes_[cur].vertex >= 0);
        return nodes_[cur].vertex;
    }

    // Maximum-weight edge on the path from the current root to v, ties broken
    // toward the root; empty if v is the root.
    std::optional<std::pair<EdgeHandle, std::int64_t>> max_edge(VertexId v) {
        expose(v);
        if (nodes_[v].mx == kNoWeight) return std::nullopt;
        return locate_leftmost_at_least(v, nodes_[v].mx);
    }

    // Leftmost (closest to root) edge on the root-to-v path with weight >= t.
    std::optional<std::pair<EdgeHandle, std::int64_t>> first_edge_at_least(VertexId v, std::int64_t t) {
        if (t == kNoWeight) ++t;  // vertex nodes must never satisfy the predicate
        expose(v);
        if (nodes_[v].mx < t) return std::nullopt;
        return locate_leftmost_at_least(v, t);
    }

    // Which endpoint of e is nearer the current root (first), farther (second).
    std::pair<VertexId, VertexId> parent_side(EdgeHandle h) {
        std::int32_t e = checked(h);
        auto [a, b] = edge_ends(e);
        std::int64_t da = depth(a);
        std::int64_t db = depth(b);
        assert(da != db);
        return da < db ? std::make_pair(a, b) : std::make_pair(b, a);
    }

    std::pair<VertexId, VertexId> endpoints(EdgeHandle h) { return edge_ends(checked(h)); }

    std::int64_t weight(EdgeHandle h) { return nodes_[checked(h)].w; }

    bool live(EdgeHandle h) const {
        return h.slot >= nvertices_ && h.slot < static_cast<std::int32_t>(nodes_.size()) &&
               nodes_[h.slot].gen == h.gen && nodes_[h.slot].vertex == -1 && nodes_[h.slot].edge_live;
    }

    std::uint64_t rotations() const { return rotations_; }

private:
    struct Node {
        std::int32_t l = -1;
        std::int32_t r = -1;
        std::int32_t p = -1;
        std::int64_t w = kNoWeight;
        std::int64_t mx = kNoWeight;
        std::int32_t sz = 1;
        VertexId vertex = -1;  // >= 0 for vertex nodes
        VertexId ea = -1;      // endpoints, edge nodes only
        VertexId eb = -1;
        std::uint32_t gen = 0;
        bool flip = false;
        bool edge_live = false;
    };

    std::int32_t alloc_edge(VertexId u, VertexId v, std::int64_t w) {
        std::int32_t e;
        if (!free_.empty()) {
            e = free_.back();
            free_.pop_back();
        } else {
            e = static_cast<std::int32_t>(nodes_.size());
            nodes_.emplace_back();
        }
        Node& n = nodes_[e];
        n.l = n.r = n.p = -1;
        n.w = n.mx = w;
        n.sz = 1;
        n.vertex = -1;
        n.ea = u;
        n.eb = v;
        n.flip = false;
        n.edge_live = true;
        return e;
    }

    void free_edge(std::int32_t e) {
        nodes_[e].edge_live = false;
        ++nodes_[e].gen;
        free_.push_back(e);
    }

    std::int32_t checked(EdgeHandle h) const {
        if (!live(h)) throw stale_handle_error("stale tree-edge handle");
        return h.slot;
    }

    std::pair<VertexId, VertexId> edge_ends(std::int32_t e) const { return {nodes_[e].ea, nodes_[e].eb}; }

    bool is_splay_root(std::int32_t x) const {
        std::int32_t p = nodes_[x].p;
        return p < 0 || (nodes_[p].l != x && nodes_[p].r != x);
    }

    void push(std::int32_t x) {
        Node& n = nodes_[x];
        if (!n.flip) return;
        std::swap(n.l, n.r);
        if (n.l >= 0) nodes_[n.l].flip ^= 1;
        if (n.r >= 0) nodes_[n.r].flip ^= 1;
        n.flip = false;
    }

    void pull(std::int32_t x) {
        Node& n = nodes_[x];
        n.sz = 1;
        n.mx = n.w;
        if (n.l >= 0) {
            n.sz += nodes_[n.l].sz;
            if (nodes_[n.l].mx > n.mx) n.mx = nodes_[n.l].mx;
        }
        if (n.r >= 0) {
            n.sz += nodes_[n.r].sz;
            if (nodes_[n.r].mx > n.mx) n.mx = nodes_[n.r].mx;
        }
    }

    int dir(std::int32_t x) const {
        std::int32_t p = nodes_[x].p;
        if (p < 0) return -1;
        if (nodes_[p].l == x) return 0;
        if (nodes_[p].r == x) return 1;
        return -1;
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
        ++rotations_;
    }

    void splay(std::int32_t x) {
        push(x);
        while (!is_splay_root(x)) {
            std::int32_t y = nodes_[x].p;
            if (is_splay_root(y)) {
                push(y);
                push(x);
                rotate(x);
            } else {
                std::int32_t z = nodes_[y].p;
                push(z);
                push(y);
                push(x);
                if (dir(x) == dir(y))
                    rotate(y);
                else
                    rotate(x);
                rotate(x);
            }
        }
    }

    void expose(std::int32_t x) {
        std::int32_t last = -1;
        for (std::int32_t cur = x; cur >= 0; cur = nodes_[cur].p) {
            splay(cur);
            nodes_[cur].r = last;
            pull(cur);
            last = cur;
        }
        splay(x);
    }

    std::int64_t depth(VertexId v) {
        expose(v);
        push(v);
        return nodes_[v].l >= 0 ? nodes_[nodes_[v].l].sz : 0;
    }

    // Precondition: x is exposed and its subtree max is >= t.
    std::pair<EdgeHandle, std::int64_t> locate_leftmost_at_least(std::int32_t x, std::int64_t t) {
        std::int32_t cur = x;
        for (;;) {
            push(cur);
            std::int32_t l = nodes_[cur].l;
            if (l >= 0 && nodes_[l].mx >= t) {
                cur = l;
            } else if (nodes_[cur].w >= t) {
                break;
            } else {
                cur = nodes_[cur].r;
                assert(cur >= 0);
            }
        }
        std::int64_t w = nodes_[cur].w;
        assert(nodes_[cur].vertex == -1);
        EdgeHandle h{cur, nodes_[cur].gen};
        splay(cur);
        return {h, w};
    }

    std::vector<Node> nodes_;
    std::vector<std::int32_t> free_;
    VertexId nvertices_;
    std::uint64_t rotations_ = 0;
};

}  // namespace dyncut
