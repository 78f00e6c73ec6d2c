#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "dyncut/errors.hpp"
#include "dyncut/graph.hpp"
#include "dyncut/multigraph.hpp"

namespace dyncut {

// A cut of the host graph: one side of the bipartition plus the crossing
// edges, by original identifiers.
struct Cut {
    std::vector<VertexId> side;
    std::vector<EdgeId> crossing;
    bool trivial = false;
};

struct CutFamily {
    std::int64_t lambda = 0;
    std::vector<Cut> cuts;
};

// Exact global minimum cut of a connected multigraph via maximum-adjacency
// orderings (deterministic: ties pick the smallest vertex index). Returns the
// cut value and one side of the bipartition, as multigraph vertex indices.
inline std::pair<std::int64_t, std::vector<std::int32_t>> min_cut_exact(const Multigraph& mg) {
    const std::int32_t n = mg.n;
    if (n < 2) throw degenerate_input_error("minimum cut needs at least two vertices");
    if (!mg.connected()) throw disconnected_error("minimum cut of a disconnected multigraph");

    std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
    for (const Multigraph::MEdge& e : mg.edges) {
        w[e.u][e.v] += 1;
        w[e.v][e.u] += 1;
    }
    std::vector<std::vector<std::int32_t>> bundle(n);
    for (std::int32_t v = 0; v < n; ++v) bundle[v] = {v};
    std::vector<char> merged(n, 0);

    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int32_t> best_side;

    for (std::int32_t phase = n - 1; phase >= 1; --phase) {
        std::vector<char> in_a(n, 0);
        std::vector<std::int64_t> conn(n, 0);
        std::int32_t prev = -1, last = -1;
        for (std::int32_t step = 0; step < phase + 1; ++step) {
            std::int32_t pick = -1;
            for (std::int32_t v = 0; v < n; ++v) {
                if (merged[v] || in_a[v]) continue;
                if (pick < 0 || conn[v] > conn[pick]) pick = v;
            }
            in_a[pick] = 1;
            for (std::int32_t v = 0; v < n; ++v)
                if (!merged[v] && !in_a[v]) conn[v] += w[pick][v];
            prev = last;
            last = pick;
        }
        std::int64_t cut_of_phase = 0;
        for (std::int32_t v = 0; v < n; ++v)
            if (!merged[v] && v != last) cut_of_phase += w[last][v];
        if (cut_of_phase < best) {
            best = cut_of_phase;
            best_side = bundle[last];
        }
        // Merge last into prev.
        merged[last] = 1;
        bundle[prev].insert(bundle[prev].end(), bundle[last].begin(), bundle[last].end());
        for (std::int32_t v = 0; v < n; ++v) {
            if (merged[v] || v == prev) continue;
            w[prev][v] += w[last][v];
            w[v][prev] += w[v][last];
        }
    }
    std::sort(best_side.begin(), best_side.end());
    return {best, best_side};
}

// All minimum cuts of a connected multigraph with at most `limit` vertices,
// by exhaustive enumeration of bipartitions with connected sides. Sides are
// reported as the half not containing vertex 0.
struct MultigraphCutFamily {
    std::int64_t lambda = 0;
    std::vector<std::uint32_t> sides;  // bitmask over multigraph vertices
};

inline MultigraphCutFamily enumerate_min_cuts(const Multigraph& mg, std::int32_t limit = 20) {
    const std::int32_t n = mg.n;
    if (n > limit || n > 30) throw size_limit_error("multigraph too large for cut enumeration");
    if (n < 2) throw degenerate_input_error("cut enumeration needs at least two vertices");
    if (!mg.connected()) throw disconnected_error("cut enumeration of a disconnected multigraph");

    std::vector<std::uint32_t> nbr(n, 0);
    std::vector<std::vector<std::int32_t>> mult(n, std::vector<std::int32_t>(n, 0));
    for (const Multigraph::MEdge& e : mg.edges) {
        nbr[e.u] |= 1u << e.v;
        nbr[e.v] |= 1u << e.u;
        ++mult[e.u][e.v];
        ++mult[e.v][e.u];
    }
    auto mask_connected = [&](std::uint32_t mask) {
        std::int32_t start = std::countr_zero(mask);
        std::uint32_t seen = 1u << start;
        std::uint32_t frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                std::int32_t v = std::countr_zero(f);
                f &= f - 1;
                next |= nbr[v] & mask;
            }
            next &= ~seen;
            if (!next) break;
            seen |= next;
            frontier = next;
        }
        return seen == mask;
    };

    const std::uint32_t full = (1u << n) - 1;
    MultigraphCutFamily fam;
    fam.lambda = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t side = 1; side < (1u << (n - 1)); ++side) {
        std::uint32_t mask = side << 1;  // vertex 0 always on the complement
        std::uint32_t comp = full & ~mask;
        if (!mask_connected(mask) || !mask_connected(comp)) continue;
        std::int64_t value = 0;
        std::uint32_t m = mask;
        while (m) {
            std::int32_t u = std::countr_zero(m);
            m &= m - 1;
            std::uint32_t cross = nbr[u] & comp;
            while (cross) {
                std::int32_t v = std::countr_zero(cross);
                cross &= cross - 1;
                value += mult[u][v];
            }
        }
        if (value < fam.lambda) {
            fam.lambda = value;
            fam.sides.clear();
        }
        if (value == fam.lambda) fam.sides.push_back(mask);
    }
    return fam;
}

inline std::vector<std::int32_t> mask_vertices(std::uint32_t mask) {
    std::vector<std::int32_t> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Crossing edges of a multigraph bipartition given one side.
inline std::vector<std::size_t> crossing_edges(const Multigraph& mg, const std::vector<char>& on_side) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mg.edges.size(); ++i) {
        const auto& e = mg.edges[i];
        if (on_side[e.u] != on_side[e.v]) out.push_back(i);
    }
    return out;
}

}  // namespace dyncut
