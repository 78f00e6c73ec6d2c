#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "dyncut/random.hpp"
#include "dyncut/sampled_list.hpp"

using dyncut::Rng;
using dyncut::SampledList;

namespace {

// Chi-square critical values at significance 1e-3.
double chi2_crit(int dof) {
    static const std::map<int, double> table = {{1, 10.828}, {2, 13.816}, {3, 16.266}, {4, 18.467},
                                                {5, 20.515}, {6, 22.458}, {7, 24.322}, {9, 27.877}};
    return table.at(dof);
}

double chi2_stat(const std::vector<long>& freq, double expected) {
    double s = 0;
    for (long f : freq) {
        double d = f - expected;
        s += d * d / expected;
    }
    return s;
}

}  // namespace

TEST_CASE("append grows a complete tree") {
    SampledList<int> l;
    REQUIRE(l.level_count() == 0);

    l.append(10);
    REQUIRE(l.level_count() == 1);
    REQUIRE(l.at_position(1) == 10);

    l.append(20);
    l.append(30);  // becomes right child of the root
    REQUIRE(l.level_count() == 2);
    REQUIRE(l.at_position(3) == 30);  // t=3 = "11": one right step
    REQUIRE(l.at_position(2) == 20);

    l.append(40);  // opens level 3
    REQUIRE(l.level_count() == 3);
    l.audit();
}

TEST_CASE("remove swaps in the last element") {
    SampledList<char> l;
    auto ha = l.append('a');
    l.append('b');
    l.append('c');

    l.remove(ha);
    REQUIRE(l.size() == 2);
    REQUIRE(l.at_position(1) == 'c');  // last element took the root slot
    REQUIRE(l.at_position(2) == 'b');
    l.audit();

    SampledList<int> single;
    auto h = single.append(7);
    REQUIRE(single.remove(h) == 7);
    REQUIRE(single.size() == 0);
    REQUIRE(single.level_count() == 0);

    // Double remove through the same handle is detected.
    SampledList<int> s2;
    auto h2 = s2.append(1);
    s2.append(2);
    s2.remove(h2);
    REQUIRE_THROWS_AS(s2.remove(h2), dyncut::stale_handle_error);
}

TEST_CASE("sampling from an empty list fails") {
    SampledList<int> l;
    Rng rng(1);
    REQUIRE_THROWS_AS(l.sample(rng), dyncut::empty_list_error);
}

TEST_CASE("digit paths reach every position, exhaustively to 64") {
    SampledList<int> l;
    for (int n = 1; n <= 64; ++n) {
        l.append(n);
        l.audit();  // includes the full position-walk check
        auto order = l.items_in_order();
        REQUIRE(static_cast<int>(order.size()) == n);
        for (int p = 1; p <= n; ++p) REQUIRE(l.at_position(p) == order[p - 1]);
    }
}

TEST_CASE("fixed position draw is a deterministic replay") {
    SampledList<int> l;
    for (int i = 0; i < 10; ++i) l.append(100 + i);
    auto order = l.items_in_order();
    for (int t = 1; t <= 10; ++t) REQUIRE(l.at_position(t) == order[t - 1]);
}

TEST_CASE("samples are uniform (chi-square, l=7)") {
    SampledList<int> l;
    for (int i = 0; i < 7; ++i) l.append(i);
    Rng rng(20240817);
    std::vector<long> freq(7, 0);
    const long draws = 70000;
    for (long i = 0; i < draws; ++i) ++freq[l.sample(rng)];
    REQUIRE(chi2_stat(freq, draws / 7.0) < chi2_crit(6));
}

TEST_CASE("random interleaving keeps shape invariants and O(1) updates") {
    SampledList<int> l;
    std::vector<SampledList<int>::Handle> handles;
    Rng rng(42);
    int next = 0;
    int max_writes = 0;
    const int ops = 100000;
    for (int i = 0; i < ops; ++i) {
        bool grow = handles.empty() || (handles.size() < 200 && rng.chance(0.55));
        if (grow) {
            handles.push_back(l.append(next++));
        } else {
            std::size_t k = rng.below(handles.size());
            l.remove(handles[k]);
            handles[k] = handles.back();
            handles.pop_back();
        }
        max_writes = std::max(max_writes, l.pointer_ops_last());
        l.audit();  // shape invariants after every single operation
    }
    REQUIRE(max_writes <= 16);  // worst-case constant pointer work per update
}
