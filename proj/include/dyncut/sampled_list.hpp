#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "dyncut/errors.hpp"
#include "dyncut/random.hpp"

namespace dyncut {

// Uniform sampling from a dynamically changing list.
//
// The items form an implicit complete binary tree: the item at position i has
// children at positions 2i and 2i+1, levels are kept full except the deepest,
// which fills left to right. Each level is additionally threaded as a doubly
// linked list, which is what makes append and remove constant-time. Sampling
// draws a position t in [1, l] and walks the binary digits of t from the root.
//
// remove() moves the last item into the removed slot, so list order is not
// stable; uniformity of sample() is unaffected.
template <class T>
class SampledList {
public:
    struct Handle {
        std::int32_t slot = -1;
        std::uint32_t gen = 0;
    };

    SampledList() = default;

    std::int64_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    // Number of tree levels; equals ceil(log2(l+1)).
    int level_count() const { return static_cast<int>(levels_.size()); }

    // Structural pointer assignments performed by the last append/remove.
    int pointer_ops_last() const { return writes_; }

    Handle append(T value) {
        writes_ = 0;
        std::int32_t nd = alloc(std::move(value));
        if (count_ == 0) {
            node(nd).level = 1;
            levels_.push_back({nd, nd});
            writes_ += 2;
        } else {
            std::int32_t last = levels_.back().tail;
            std::int32_t p = node(last).parent;
            if (p >= 0 && node(p).left == last) {
                attach_child(p, nd, /*left=*/false);
                push_level_tail(static_cast<int>(node(last).level) - 1, nd);
                node(nd).level = node(last).level;
            } else if (p >= 0 && node(p).next >= 0) {
                attach_child(node(p).next, nd, /*left=*/true);
                push_level_tail(static_cast<int>(node(last).level) - 1, nd);
                node(nd).level = node(last).level;
            } else {
                // Deepest level is full: open a new one under its first entry.
                std::int32_t first = levels_.back().head;
                attach_child(first, nd, /*left=*/true);
                node(nd).level = node(first).level + 1;
                levels_.push_back({nd, nd});
                writes_ += 2;
            }
        }
        ++count_;
        return Handle{nd, node(nd).gen};
    }

    T remove(Handle h) {
        writes_ = 0;
        check(h);
        std::int32_t x = h.slot;
        std::int32_t last = levels_.back().tail;

        unlink_last(last);
        if (x != last) transplant(last, x);

        --count_;
        T out = std::move(node(x).value);
        free(x);
        return out;
    }

    const T& get(Handle h) const {
        check(h);
        return nodes_[h.slot].value;
    }

    bool live(Handle h) const {
        return h.slot >= 0 && h.slot < static_cast<std::int32_t>(nodes_.size()) &&
               nodes_[h.slot].gen == h.gen && nodes_[h.slot].live;
    }

    // Item at position t of the implicit tree, t in [1, l]. Walks the binary
    // digits of t below the leading one: 0 goes left, 1 goes right.
    const T& at_position(std::int64_t t) const {
        if (count_ == 0) throw empty_list_error("sample from empty list");
        if (t < 1 || t > count_) throw error("position out of range");
        std::uint64_t u = static_cast<std::uint64_t>(t);
        int msb = 63 - std::countl_zero(u);
        std::int32_t cur = levels_.front().head;
        for (int b = msb - 1; b >= 0; --b) cur = ((u >> b) & 1) ? node_c(cur).right : node_c(cur).left;
        return nodes_[cur].value;
    }

    const T& sample(Rng& rng) const {
        if (count_ == 0) throw empty_list_error("sample from empty list");
        return at_position(static_cast<std::int64_t>(rng.in(1, static_cast<std::uint64_t>(count_))));
    }

    // In-list order: levels top to bottom, each level left to right.
    std::vector<T> items_in_order() const {
        std::vector<T> out;
        out.reserve(count_);
        for (const Level& lv : levels_)
            for (std::int32_t n = lv.head; n >= 0; n = node_c(n).next) out.push_back(nodes_[n].value);
        return out;
    }

    // Full structural audit; throws on any violated invariant.
    void audit() const {
        std::int64_t seen = 0;
        std::int64_t width = 1;
        for (std::size_t d = 0; d < levels_.size(); ++d) {
            std::int64_t in_level = 0;
            std::int32_t prev = -1;
            for (std::int32_t n = levels_[d].head; n >= 0; n = node_c(n).next) {
                const Node& nn = node_c(n);
                if (!nn.live || nn.level != static_cast<std::int32_t>(d + 1)) throw error("audit: bad level tag");
                if (nn.prev != prev) throw error("audit: broken level links");
                prev = n;
                ++in_level;
            }
            if (levels_[d].tail != prev) throw error("audit: bad tail");
            bool last_level = (d + 1 == levels_.size());
            if (!last_level && in_level != width) throw error("audit: non-full interior level");
            if (last_level && (in_level < 1 || in_level > width)) throw error("audit: bad last level");
            seen += in_level;
            width *= 2;
        }
        if (seen != count_) throw error("audit: count mismatch");
        int expect_levels = (count_ == 0) ? 0 : std::bit_width(static_cast<std::uint64_t>(count_));
        if (static_cast<int>(levels_.size()) != expect_levels) throw error("audit: level count");
        // Position walk agrees with level-order enumeration.
        std::int64_t pos = 0;
        for (const Level& lv : levels_)
            for (std::int32_t n = lv.head; n >= 0; n = node_c(n).next) {
                ++pos;
                if (&at_position(pos) != &nodes_[n].value) throw error("audit: digit path mismatch");
            }
    }

private:
    struct Node {
        T value{};
        std::int32_t parent = -1;
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::int32_t prev = -1;
        std::int32_t next = -1;
        std::int32_t level = 0;
        std::uint32_t gen = 0;
        bool live = false;
    };
    struct Level {
        std::int32_t head;
        std::int32_t tail;
    };

    Node& node(std::int32_t i) { return nodes_[i]; }
    const Node& node_c(std::int32_t i) const { return nodes_[i]; }

    void check(Handle h) const {
        if (!live(h)) throw stale_handle_error("stale or invalid list handle");
    }

    std::int32_t alloc(T value) {
        std::int32_t nd;
        if (!free_.empty()) {
            nd = free_.back();
            free_.pop_back();
        } else {
            nd = static_cast<std::int32_t>(nodes_.size());
            nodes_.emplace_back();
        }
        Node& n = node(nd);
        n.value = std::move(value);
        n.parent = n.left = n.right = n.prev = n.next = -1;
        n.live = true;
        return nd;
    }

    void free(std::int32_t nd) {
        node(nd).live = false;
        ++node(nd).gen;
        free_.push_back(nd);
    }

    void attach_child(std::int32_t p, std::int32_t c, bool left) {
        (left ? node(p).left : node(p).right) = c;
        node(c).parent = p;
        writes_ += 2;
    }

    void push_level_tail(int level_ix, std::int32_t nd) {
        Level& lv = levels_[level_ix];
        node(nd).prev = lv.tail;
        node(lv.tail).next = nd;
        lv.tail = nd;
        writes_ += 3;
    }

    // Detach the deepest level's tail node from tree and level list.
    void unlink_last(std::int32_t last) {
        Node& ln = node(last);
        if (ln.parent >= 0) {
            Node& p = node(ln.parent);
            (p.left == last ? p.left : p.right) = -1;
            ++writes_;
        }
        Level& lv = levels_.back();
        if (ln.prev >= 0) {
            node(ln.prev).next = -1;
            lv.tail = ln.prev;
            writes_ += 2;
        } else {
            levels_.pop_back();
            ++writes_;
        }
        ln.parent = ln.prev = ln.next = -1;
    }

    // Move the (already unlinked) node into x's structural position.
    void transplant(std::int32_t nd, std::int32_t x) {
        Node& n = node(nd);
        Node& xn = node(x);
        n.parent = xn.parent;
        if (xn.parent >= 0) {
            Node& p = node(xn.parent);
            (p.left == x ? p.left : p.right) = nd;
            ++writes_;
        }
        n.left = xn.left;
        if (n.left >= 0) node(n.left).parent = nd;
        n.right = xn.right;
        if (n.right >= 0) node(n.right).parent = nd;
        n.level = xn.level;
        n.prev = xn.prev;
        n.next = xn.next;
        writes_ += 5;
        Level& lv = levels_[n.level - 1];
        if (n.prev >= 0)
            node(n.prev).next = nd;
        else
            lv.head = nd;
        if (n.next >= 0)
            node(n.next).prev = nd;
        else
            lv.tail = nd;
        writes_ += 2;
    }

    std::vector<Node> nodes_;
    std::vector<std::int32_t> free_;
    std::vector<Level> levels_;
    std::int64_t count_ = 0;
    int writes_ = 0;
};

}  // namespace dyncut
