#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "dyncut/min_cut.hpp"
#include "dyncut/oracles.hpp"
#include "dyncut/random.hpp"

using namespace dyncut;

namespace {

Multigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Multigraph mg(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) mg.add_edge(pairs[i].first, pairs[i].second, static_cast<EdgeId>(i));
    return mg;
}

std::set<std::vector<int>> canonical_sides(const MultigraphCutFamily& fam, int n) {
    std::set<std::vector<int>> out;
    for (std::uint32_t mask : fam.sides) {
        auto side = mask_vertices(mask);
        if (std::find(side.begin(), side.end(), 0) != side.end()) {
            std::vector<int> comp;
            for (int v = 0; v < n; ++v)
                if (std::find(side.begin(), side.end(), v) == side.end()) comp.push_back(v);
            side = comp;
        }
        out.insert(side);
    }
    return out;
}

}  // namespace

TEST_CASE("stoer-wagner exact minimum cut") {
    // Two triangles joined by one edge.
    auto bridge = from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
    auto [v1, side1] = min_cut_exact(bridge);
    REQUIRE(v1 == 1);
    std::vector<int> lo(side1.begin(), side1.end());
    std::sort(lo.begin(), lo.end());
    bool left = lo == std::vector<int>{0, 1, 2};
    bool right = lo == std::vector<int>{3, 4, 5};
    REQUIRE((left || right));

    auto k4 = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    REQUIRE(min_cut_exact(k4).first == 3);

    auto parallel = from_pairs(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
    REQUIRE(min_cut_exact(parallel).first == 5);

    auto split = from_pairs(3, {{0, 1}});
    REQUIRE_THROWS_AS(min_cut_exact(split), disconnected_error);
}

TEST_CASE("minimum-cut enumeration at desk scale") {
    auto c4 = from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto fam = enumerate_min_cuts(c4);
    REQUIRE(fam.lambda == 2);
    REQUIRE(fam.sides.size() == 6);  // 4 trivial + 2 antipodal pair-splits

    auto k4 = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto famk = enumerate_min_cuts(k4);
    REQUIRE(famk.lambda == 3);
    REQUIRE(famk.sides.size() == 4);
    for (std::uint32_t mask : famk.sides) {
        int pc = std::popcount(mask);
        REQUIRE((pc == 1 || pc == 3));  // {0}'s cut is listed as its complement
    }

    auto p4 = from_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
    auto famp = enumerate_min_cuts(p4);
    REQUIRE(famp.lambda == 1);
    REQUIRE(famp.sides.size() == 3);  // one per bridge

    Multigraph big(21);
    for (int i = 0; i < 21; ++i) big.add_edge(i, (i + 1) % 21);
    REQUIRE_THROWS_AS(enumerate_min_cuts(big), size_limit_error);
}

TEST_CASE("enumeration agrees with the oracle family on random multigraphs") {
    Rng rng(246);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng.below(6));
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i < n; ++i) pairs.emplace_back(static_cast<int>(rng.below(i)), i);
        int extra = static_cast<int>(rng.below(8));
        for (int e = 0; e < extra; ++e) {
            int u = static_cast<int>(rng.below(n));
            int v = static_cast<int>(rng.below(n));
            if (u != v) pairs.emplace_back(std::min(u, v), std::max(u, v));
        }
        auto mg = from_pairs(n, pairs);
        auto fam = enumerate_min_cuts(mg);
        auto ofam = oracle::min_cut_family(n, pairs);
        REQUIRE(fam.lambda == ofam.lambda);
        std::set<std::vector<int>> osides(ofam.sides.begin(), ofam.sides.end());
        REQUIRE(canonical_sides(fam, n) == osides);

        // Stoer-Wagner value agrees too.
        REQUIRE(min_cut_exact(mg).first == ofam.lambda);
    }
}
