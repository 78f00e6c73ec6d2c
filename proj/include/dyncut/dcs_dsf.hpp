#pragma once

#include <cassert>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "dyncut/dynamic_msf.hpp"
#include "dyncut/errors.hpp"
#include "dyncut/euler_tour_forest.hpp"
#include "dyncut/graph.hpp"
#include "dyncut/op_counters.hpp"

namespace dyncut {

// Dynamic cut-set structure: the caller controls a forest F over the edges of
// a dynamic graph, and find_cutedge(v) returns an edge leaving the F-tree of v
// if one exists.
//
// Realized by reduction to the 0/1-weight dynamic MSF: every edge of F has
// weight 0, every other edge weight 1. Then (1) the weight-0 edges are exactly
// F, (2) F is a forest, and (3) each tree of F is a subtree of a tree of the
// spanning forest F', which is what makes find_cutedge answerable with one
// tree-maximum and one path-maximum query.
class DcsStructure {
public:
    explicit DcsStructure(VertexId n) : msf_(n), f_copy_(n) {}

    VertexId vertex_count() const { return msf_.vertex_count(); }

    void insert_G(EdgeId id, VertexId u, VertexId v) {
        ++counters.dcs_insert_g;
        msf_.insert(id, u, v, 1);
    }

    void delete_G(EdgeId id) {
        ++counters.dcs_delete_g;
        if (in_F(id)) drop_from_F(id);
        msf_.erase(id);
    }

    // Adds edge id to F if its endpoints lie in different trees of F.
    bool insert_F(EdgeId id) {
        ++counters.dcs_insert_f;
        auto [u, v] = msf_.endpoints_of(id);
        if (f_copy_.same_tree(u, v)) return false;
        msf_.erase(id);
        msf_.insert(id, u, v, 0);
        if (static_cast<std::size_t>(id) >= f_handle_.size()) {
            f_handle_.resize(id + 1);
            f_flag_.resize(id + 1, 0);
        }
        f_handle_[id] = f_copy_.link_unchecked(u, v, 0, id);
        f_flag_[id] = 1;
        ++f_count_;
        return true;
    }

    // Removes edge id from F (keeping it in the graph); false if not in F.
    bool delete_F(EdgeId id) {
        ++counters.dcs_delete_f;
        auto [u, v] = msf_.endpoints_of(id);
        if (!in_F(id)) return false;
        drop_from_F(id);
        msf_.erase(id);
        msf_.insert(id, u, v, 1);
        return true;
    }

    // An edge of G with exactly one endpoint in the F-tree of v, if any.
    std::optional<Edge> find_cutedge(VertexId v) {
        ++counters.dcs_find_cutedge;
        if (f_copy_.tree_size(v) == msf_.forest().tree_size(v)) return std::nullopt;
        auto top = msf_.forest().tree_max_edge(v);
        assert(top && top->second >= DynMsf::kHeavyMinKey);
        EdgeId e1 = static_cast<EdgeId>(msf_.forest().tag(top->first));
        auto [x, y] = msf_.endpoints_of(e1);
        if (f_copy_.same_tree(x, v) || f_copy_.same_tree(y, v)) return edge(e1);
        LinkCutForest& m = msf_.mirror();
        m.evert(v);
        VertexId closer = m.parent_side(msf_.mirror_handle(e1)).first;
        auto res = m.first_edge_at_least(closer, DynMsf::kHeavyMinKey);
        assert(res);
        return edge(msf_.mirror_edge(res->first));
    }

    bool has_edge(EdgeId id) const { return msf_.has_edge(id); }
    bool in_F(EdgeId id) const {
        return id >= 0 && id < static_cast<EdgeId>(f_flag_.size()) && f_flag_[id];
    }
    std::int64_t f_size() const { return f_count_; }

    std::vector<EdgeId> f_edges() const {
        std::vector<EdgeId> out;
        out.reserve(f_count_);
        for (EdgeId id = 0; id < static_cast<EdgeId>(f_flag_.size()); ++id)
            if (f_flag_[id]) out.push_back(id);
        return out;
    }
    Edge edge(EdgeId id) const {
        auto [u, v] = msf_.endpoints_of(id);
        return Edge{id, u, v};
    }

    bool f_same_tree(VertexId u, VertexId v) { return f_copy_.same_tree(u, v); }
    std::int32_t f_tree_size(VertexId v) { return f_copy_.tree_size(v); }

    template <class Fn>
    void for_each_vertex_in_f_tree(VertexId v, Fn&& fn) {
        f_copy_.for_each_vertex_in_tree(v, std::forward<Fn>(fn));
    }

    DynMsf& msf() { return msf_; }
    const DynMsf& msf() const { return msf_; }

    // Logical state: live edges with weights, F, and the spanning forest F'.
    struct Snapshot {
        std::vector<std::tuple<EdgeId, VertexId, VertexId, int>> edges;
        std::vector<EdgeId> f;
        std::vector<EdgeId> forest;

        bool operator==(const Snapshot&) const = default;
    };

    Snapshot snapshot() const {
        Snapshot s;
        msf_.for_each_edge([&](EdgeId id, VertexId u, VertexId v, int w, bool) { s.edges.emplace_back(id, u, v, w); });
        s.f = f_edges();
        s.forest = msf_.forest_edges();
        return s;
    }

    // Reduction invariants: weight-0 edges are exactly F, and F is a
    // subforest of F'.
    void audit_invariants() const {
        std::vector<EdgeId> light;
        msf_.for_each_edge([&](EdgeId id, VertexId, VertexId, int w, bool tree) {
            if (w == 0) {
                light.push_back(id);
                if (!tree) throw error("dcs audit: light edge outside spanning forest");
            }
        });
        if (light != f_edges()) throw error("dcs audit: weight-0 edges differ from F");
    }

    OpCounters counters;

private:
    void drop_from_F(EdgeId id) {
        f_copy_.cut(f_handle_[id]);
        f_flag_[id] = 0;
        --f_count_;
    }

    DynMsf msf_;
    EulerTourForest f_copy_;
    std::vector<EulerTourForest::EdgeHandle> f_handle_;
    std::vector<char> f_flag_;
    std::int64_t f_count_ = 0;
};

// Dynamic spanning forest with replacement reporting, as the forward
// reduction onto the cut-set structure: insertions try to grow F, deletions
// of tree edges look for a replacement with find_cutedge.
class DsfStructure {
public:
    explicit DsfStructure(VertexId n) : dcs_(n) {}

    VertexId vertex_count() const { return dcs_.vertex_count(); }

    // Returns true if the edge joined the spanning forest.
    bool insert(EdgeId id, VertexId u, VertexId v) {
        ++counters.dsf_insert;
        dcs_.insert_G(id, u, v);
        return dcs_.insert_F(id);
    }

    // Deletes the edge; if it was a tree edge and a replacement reconnects
    // its tree, the replacement is installed in F and returned.
    //
    // The edge leaves the graph before the replacement search runs: while it
    // is still present (as a heavy edge), find_cutedge may hand back the edge
    // being deleted, which would silently drop the spanning property.
    std::optional<Edge> erase(EdgeId id) {
        ++counters.dsf_delete;
        if (!dcs_.in_F(id)) {
            dcs_.delete_G(id);
            return std::nullopt;
        }
        Edge e = dcs_.edge(id);
        dcs_.delete_F(id);
        dcs_.delete_G(id);
        std::optional<Edge> rep = dcs_.find_cutedge(e.u);
        if (rep) dcs_.insert_F(rep->id);
        return rep;
    }

    bool connected(VertexId u, VertexId v) { return dcs_.f_same_tree(u, v); }
    bool in_forest(EdgeId id) const { return dcs_.in_F(id); }
    std::vector<EdgeId> forest_edges() const { return dcs_.f_edges(); }
    std::int64_t forest_size() const { return dcs_.f_size(); }
    Edge edge(EdgeId id) const { return dcs_.edge(id); }
    std::int32_t component_size(VertexId v) { return dcs_.f_tree_size(v); }

    template <class Fn>
    void for_each_vertex_in_component(VertexId v, Fn&& fn) {
        dcs_.for_each_vertex_in_f_tree(v, std::forward<Fn>(fn));
    }

    // F is history-dependent (replacement choices), so query procedures that
    // churn edges capture the forest first and force it back afterwards.
    std::vector<EdgeId> forest_snapshot() const { return forest_edges(); }

    void restore_forest(const std::vector<EdgeId>& target) {
        std::set<EdgeId> want(target.begin(), target.end());
        for (EdgeId e : forest_edges())
            if (!want.count(e)) dcs_.delete_F(e);
        for (EdgeId e : target)
            if (!dcs_.in_F(e)) dcs_.insert_F(e);
    }

    DcsStructure& dcs() { return dcs_; }
    const DcsStructure& dcs() const { return dcs_; }

    OpCounters counters;

private:
    DcsStructure dcs_;
};

}  // namespace dyncut
