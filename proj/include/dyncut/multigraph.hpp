#pragma once

#include <cstdint>
#include <vector>

#include "dyncut/dsu.hpp"
#include "dyncut/graph.hpp"

namespace dyncut {

// Compact multigraph: parallel edges are repeated entries, self-loops are not
// stored. Edges optionally carry the originating EdgeId of a host graph.
struct Multigraph {
    struct MEdge {
        std::int32_t u = -1;
        std::int32_t v = -1;
        EdgeId origin = kNoEdge;
    };

    std::int32_t n = 0;
    std::vector<MEdge> edges;

    Multigraph() = default;
    explicit Multigraph(std::int32_t n) : n(n) {}

    void add_edge(std::int32_t u, std::int32_t v, EdgeId origin = kNoEdge) { edges.push_back({u, v, origin}); }

    std::vector<std::int64_t> degrees() const {
        std::vector<std::int64_t> d(n, 0);
        for (const MEdge& e : edges) {
            ++d[e.u];
            ++d[e.v];
        }
        return d;
    }

    bool connected() const {
        if (n <= 1) return true;
        Dsu dsu(n);
        for (const MEdge& e : edges) dsu.unite(e.u, e.v);
        return dsu.class_count() == 1;
    }
};

}  // namespace dyncut
