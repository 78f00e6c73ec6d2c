#pragma once

#include <vector>

#include "dyncut/dcs_dsf.hpp"
#include "dyncut/graph.hpp"
#include "dyncut/op_counters.hpp"

namespace dyncut {

// The top-level dynamic structure: the graph itself plus one spanning-forest
// structure and one cut-set structure, all updated in lock step. The cut-set
// forest stays empty between queries; query procedures build it up and tear
// it down again.
class DynamicGraphEngine {
public:
    explicit DynamicGraphEngine(VertexId n) : g_(n), dsf_(n), dcs_(n) {}

    VertexId vertex_count() const { return g_.vertex_count(); }

    EdgeId insert_edge(VertexId u, VertexId v) {
        EdgeId id = g_.insert_edge(u, v);
        dsf_.insert(id, u, v);
        dcs_.insert_G(id, u, v);
        return id;
    }

    Edge delete_edge(EdgeId id) {
        Edge e = g_.delete_edge(id);
        dsf_.erase(id);
        dcs_.delete_G(id);
        return e;
    }

    Edge delete_edge_between(VertexId u, VertexId v) {
        EdgeId id = g_.edge_between(u, v);
        if (id == kNoEdge)
            throw unknown_edge_error("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        return delete_edge(id);
    }

    // Re-inserts a previously deleted edge under its original identifier;
    // used by query rollback so state fingerprints match exactly.
    void restore_edge(const Edge& e) {
        g_.insert_edge_with_id(e.id, e.u, e.v);
        dsf_.insert(e.id, e.u, e.v);
        dcs_.insert_G(e.id, e.u, e.v);
    }

    DynamicSimpleGraph& graph() { return g_; }
    const DynamicSimpleGraph& graph() const { return g_; }
    DsfStructure& dsf() { return dsf_; }
    const DsfStructure& dsf() const { return dsf_; }
    DcsStructure& dcs() { return dcs_; }
    const DcsStructure& dcs() const { return dcs_; }

    // Aggregated instrumentation across all structures.
    OpCounters counters() const {
        OpCounters c;
        auto add_dcs = [&](const OpCounters& o) {
            c.dcs_insert_g += o.dcs_insert_g;
            c.dcs_insert_f += o.dcs_insert_f;
            c.dcs_delete_g += o.dcs_delete_g;
            c.dcs_delete_f += o.dcs_delete_f;
            c.dcs_find_cutedge += o.dcs_find_cutedge;
        };
        add_dcs(dcs_.counters);
        add_dcs(dsf_.dcs().counters);
        c.dsf_insert = dsf_.counters.dsf_insert;
        c.dsf_delete = dsf_.counters.dsf_delete;
        auto add_msf = [&](const OpCounters& o) {
            c.msf_insert += o.msf_insert;
            c.msf_delete += o.msf_delete;
            c.msf_scan_steps += o.msf_scan_steps;
        };
        add_msf(dcs_.msf().counters);
        add_msf(dsf_.dcs().msf().counters);
        return c;
    }

    // Logical state of graph + both structures; equality means a query
    // restored everything it touched.
    struct Snapshot {
        std::vector<std::tuple<EdgeId, VertexId, VertexId>> graph_edges;
        DcsStructure::Snapshot dsf_state;
        DcsStructure::Snapshot dcs_state;

        bool operator==(const Snapshot&) const = default;
    };

    Snapshot snapshot() const {
        Snapshot s;
        g_.for_each_edge([&](const Edge& e) { s.graph_edges.emplace_back(e.id, e.u, e.v); });
        s.dsf_state = dsf_.dcs().snapshot();
        s.dcs_state = dcs_.snapshot();
        return s;
    }

private:
    DynamicSimpleGraph g_;
    DsfStructure dsf_;
    DcsStructure dcs_;
};

}  // namespace dyncut
