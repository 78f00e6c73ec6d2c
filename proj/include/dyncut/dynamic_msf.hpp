#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "dyncut/errors.hpp"
#include "dyncut/euler_tour_forest.hpp"
#include "dyncut/graph.hpp"
#include "dyncut/link_cut_forest.hpp"
#include "dyncut/op_counters.hpp"

namespace dyncut {

// Fully dynamic minimum spanning forest over edge weights {0, 1}.
//
// Edges are totally ordered by the composite key (weight << 48) | EdgeId, so
// the maintained forest is the unique minimum spanning forest under that
// order: insertion evicts the maximum-key path edge, deletion installs the
// minimum-key reconnecting edge. Keeping the forest canonical in this sense is
// what makes differential tests exact and query rollback restore bit-equal
// state.
//
// Two mirrors of the forest are kept: a link-cut forest for path maxima
// (insertion evictions and the cut-set queries) and an Euler-tour forest for
// tree sizes and tree maxima. Non-tree edges sit in per-vertex buckets ordered
// by key, with the per-vertex minimum aggregated per tree through the
// Euler-tour forest. A deletion splits the tree, takes the smaller side, and
// pops that side's incident candidates in increasing key order; non-crossing
// candidates are set aside until the scan ends, so the first crossing
// candidate found is the global minimum. Every crossing edge is incident to
// the smaller side, which gives completeness.
class DynMsf {
public:
    static constexpr int kKeyShift = 48;
    static constexpr std::int64_t kHeavyMinKey = std::int64_t{1} << kKeyShift;

    static std::int64_t make_key(int weight, EdgeId id) {
        return (static_cast<std::int64_t>(weight) << kKeyShift) | id;
    }
    static EdgeId key_edge(std::int64_t key) { return key & (kHeavyMinKey - 1); }
    static int key_weight(std::int64_t key) { return static_cast<int>(key >> kKeyShift); }

    enum class InsertOutcome { became_tree, swapped, non_tree };
    struct InsertEvent {
        InsertOutcome outcome;
        EdgeId evicted = kNoEdge;  // set when outcome == swapped
    };

    explicit DynMsf(VertexId n) : n_(n), mirror_(n), forest_ett_(n), buckets_(n) {}

    DynMsf(const DynMsf&) = delete;
    DynMsf& operator=(const DynMsf&) = delete;
    DynMsf(DynMsf&&) = default;
    DynMsf& operator=(DynMsf&&) = default;

    VertexId vertex_count() const { return n_; }

    InsertEvent insert(EdgeId id, VertexId u, VertexId v, int weight) {
        if (weight != 0 && weight != 1) throw error("edge weight must be 0 or 1");
        if (u == v) throw self_loop_error("self loop");
        if (id < 0 || id >= (EdgeId{1} << kKeyShift)) throw error("edge id out of key range");
        if (static_cast<std::size_t>(id) >= recs_.size()) recs_.resize(id + 1);
        Rec& r = recs_[id];
        if (r.live) throw duplicate_edge_error("edge id already present");
        ++counters.msf_insert;
        r = Rec{};
        r.u = u;
        r.v = v;
        r.weight = static_cast<std::int8_t>(weight);
        r.live = true;
        std::int64_t key = make_key(weight, id);
        if (!forest_ett_.same_tree(u, v)) {
            attach_tree_edge(id);
            return {InsertOutcome::became_tree};
        }
        mirror_.evert(u);
        auto path_max = mirror_.max_edge(v);
        assert(path_max);
        if (path_max->second > key) {
            EdgeId evicted = mirror_edge_[path_max->first.slot];
            detach_tree_edge(evicted);
            Rec& ev = recs_[evicted];
            bucket_add(ev.u, make_key(ev.weight, evicted));
            bucket_add(ev.v, make_key(ev.weight, evicted));
            attach_tree_edge(id);
            return {InsertOutcome::swapped, evicted};
        }
        bucket_add(u, key);
        bucket_add(v, key);
        return {InsertOutcome::non_tree};
    }

    // Deletes an edge. For a tree edge, returns the minimum-key replacement
    // that rejoined its tree, if one exists.
    std::optional<Edge> erase(EdgeId id) {
        Rec& r = rec(id);
        ++counters.msf_delete;
        if (!r.tree) {
            std::int64_t key = make_key(r.weight, id);
            bucket_remove(r.u, key);
            bucket_remove(r.v, key);
            r.live = false;
            return std::nullopt;
        }
        VertexId u = r.u;
        VertexId v = r.v;
        detach_tree_edge(id);
        r.live = false;

        VertexId side = forest_ett_.tree_size(u) <= forest_ett_.tree_size(v) ? u : v;
        scratch_.clear();
        EdgeId found = kNoEdge;
        for (;;) {
            auto mk = forest_ett_.tree_min_vertex_key(side);
            if (!mk) break;
            ++counters.msf_scan_steps;
            std::int64_t key = static_cast<std::int64_t>(mk->second);
            VertexId x = mk->first;
            EdgeId cand = key_edge(key);
            const Rec& cr = recs_[cand];
            VertexId other = cr.u == x ? cr.v : cr.u;
            bucket_remove(cr.u, key);
            bucket_remove(cr.v, key);
            if (!forest_ett_.same_tree(other, x)) {
                found = cand;
                break;
            }
            scratch_.push_back(key);  // non-crossing; restore after the scan
        }
        for (std::int64_t key : scratch_) {
            EdgeId c = key_edge(key);
            bucket_add(recs_[c].u, key);
            bucket_add(recs_[c].v, key);
        }
        if (found == kNoEdge) return std::nullopt;
        attach_tree_edge(found);
        return Edge{found, recs_[found].u, recs_[found].v};
    }

    bool connected(VertexId u, VertexId v) { return forest_ett_.same_tree(u, v); }

    bool has_edge(EdgeId id) const {
        return id >= 0 && id < static_cast<EdgeId>(recs_.size()) && recs_[id].live;
    }
    bool is_tree_edge(EdgeId id) const { return has_edge(id) && recs_[id].tree; }
    int weight_of(EdgeId id) const { return rec_c(id).weight; }
    std::pair<VertexId, VertexId> endpoints_of(EdgeId id) const {
        const Rec& r = rec_c(id);
        return {r.u, r.v};
    }

    std::int64_t forest_weight() const { return heavy_tree_edges_; }
    std::int64_t forest_size() const { return tree_count_; }

    std::vector<EdgeId> forest_edges() const {
        std::vector<EdgeId> out;
        out.reserve(tree_count_);
        for (EdgeId id = 0; id < static_cast<EdgeId>(recs_.size()); ++id)
            if (recs_[id].live && recs_[id].tree) out.push_back(id);
        return out;
    }

    template <class Fn>
    void for_each_edge(Fn&& fn) const {
        for (EdgeId id = 0; id < static_cast<EdgeId>(recs_.size()); ++id)
            if (recs_[id].live) fn(id, recs_[id].u, recs_[id].v, static_cast<int>(recs_[id].weight), recs_[id].tree);
    }

    // The link-cut mirror (composite keys) and the Euler-tour copy of the
    // forest; the cut-set layer drives its queries through these.
    LinkCutForest& mirror() { return mirror_; }
    EulerTourForest& forest() { return forest_ett_; }
    EdgeId mirror_edge(LinkCutForest::EdgeHandle h) const { return mirror_edge_[h.slot]; }
    LinkCutForest::EdgeHandle mirror_handle(EdgeId id) const {
        const Rec& r = rec_c(id);
        if (!r.tree) throw error("mirror_handle: not a tree edge");
        return r.lct;
    }

    OpCounters counters;

private:
    struct Rec {
        VertexId u = -1;
        VertexId v = -1;
        std::int8_t weight = 1;
        bool live = false;
        bool tree = false;
        LinkCutForest::EdgeHandle lct;
        EulerTourForest::EdgeHandle ett;
    };

    Rec& rec(EdgeId id) {
        if (!has_edge(id)) throw unknown_edge_error("unknown msf edge " + std::to_string(id));
        return recs_[id];
    }
    const Rec& rec_c(EdgeId id) const {
        if (!has_edge(id)) throw unknown_edge_error("unknown msf edge " + std::to_string(id));
        return recs_[id];
    }

    void attach_tree_edge(EdgeId id) {
        Rec& r = recs_[id];
        std::int64_t key = make_key(r.weight, id);
        r.tree = true;
        r.lct = mirror_.link_unchecked(r.u, r.v, key);
        if (static_cast<std::size_t>(r.lct.slot) >= mirror_edge_.size()) mirror_edge_.resize(r.lct.slot + 1, kNoEdge);
        mirror_edge_[r.lct.slot] = id;
        r.ett = forest_ett_.link_unchecked(r.u, r.v, key, id);
        ++tree_count_;
        heavy_tree_edges_ += r.weight;
    }

    void detach_tree_edge(EdgeId id) {
        Rec& r = recs_[id];
        mirror_.cut(r.lct);
        mirror_edge_[r.lct.slot] = kNoEdge;
        forest_ett_.cut(r.ett);
        r.tree = false;
        --tree_count_;
        heavy_tree_edges_ -= r.weight;
    }

    // Buckets are kept as sorted vectors; their size is bounded by the
    // vertex degree and the front element feeds the per-tree key aggregate.
    void bucket_add(VertexId v, std::int64_t key) {
        std::vector<std::int64_t>& b = buckets_[v];
        b.insert(std::lower_bound(b.begin(), b.end(), key), key);
        if (b.front() == key) forest_ett_.set_vertex_key(v, static_cast<std::uint64_t>(key));
    }

    void bucket_remove(VertexId v, std::int64_t key) {
        std::vector<std::int64_t>& b = buckets_[v];
        bool was_front = b.front() == key;
        b.erase(std::lower_bound(b.begin(), b.end(), key));
        if (was_front)
            forest_ett_.set_vertex_key(v, b.empty() ? EulerTourForest::kNoKey
                                                    : static_cast<std::uint64_t>(b.front()));
    }

    VertexId n_;
    LinkCutForest mirror_;
    EulerTourForest forest_ett_;
    std::vector<std::vector<std::int64_t>> buckets_;
    std::vector<Rec> recs_;
    std::vector<EdgeId> mirror_edge_;
    std::vector<std::int64_t> scratch_;
    std::int64_t tree_count_ = 0;
    std::int64_t heavy_tree_edges_ = 0;
};

}  // namespace dyncut
