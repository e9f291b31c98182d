#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tilelab/lattice.hpp"

using namespace tilelab;

namespace {

// All nondecreasing positive integer tuples with at least two entries and
// total at most `max_sum`.
std::vector<std::vector<int>> small_profiles(int max_sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int sum, int low) -> void {
        if (cur.size() >= 2) out.push_back(cur);
        for (int v = low; sum + v <= max_sum; ++v) {
            cur.push_back(v);
            self(self, sum + v, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, 1);
    return out;
}

std::vector<IndexVector> pairwise_difference_vectors(const std::vector<int>& a) {
    std::vector<IndexVector> gens;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (i != j)
                gens.push_back({static_cast<long long>(a[i] - a[j]),
                                static_cast<long long>(a[j] - a[i])});
    return gens;
}

}  // namespace

TEST_SUITE_BEGIN("lattice");

TEST_CASE("index vectors") {
    std::vector<std::vector<Vertex>> evens_odds{{0, 2, 4, 6}, {1, 3, 5, 7}};
    CHECK(index_vector(evens_odds, {}) == IndexVector{0, 0});
    CHECK(index_vector(evens_odds, {0, 1, 2}) == IndexVector{2, 1});

    std::vector<Vertex> set{0, 2, 3, 5, 6};
    auto v = index_vector(evens_odds, set);
    CHECK(std::accumulate(v.begin(), v.end(), 0LL) ==
          static_cast<long long>(set.size()));

    CHECK_THROWS_AS(index_vector(evens_odds, {9}), Error);
}

TEST_CASE("lattice membership") {
    std::vector<IndexVector> gens{{1, 2}, {2, 1}};
    CHECK(lattice_contains(gens, {1, -1}));
    CHECK_FALSE(lattice_contains(gens, {1, 0}));
    CHECK(lattice_contains({}, {0, 0}));
    CHECK_FALSE(lattice_contains({}, {1, 0}));
}

TEST_CASE("membership agrees with bounded brute force") {
    std::mt19937 rng(555);
    int found_positive = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int r = 2 + static_cast<int>(rng() % 3);
        int g = 1 + static_cast<int>(rng() % 3);
        std::vector<IndexVector> gens;
        for (int i = 0; i < g; ++i) {
            IndexVector v(r);
            for (auto& x : v) x = static_cast<long long>(rng() % 11) - 5;
            gens.push_back(std::move(v));
        }
        IndexVector target(r);
        for (auto& x : target) x = static_cast<long long>(rng() % 11) - 5;

        bool exact = lattice_contains(gens, target);
        bool bounded = oracles::bounded_combination_exists(gens, target, 10);
        if (bounded) {
            CHECK(exact);
            ++found_positive;
        }
        if (!exact) CHECK_FALSE(bounded);
    }
    CHECK(found_positive > 0);  // the comparison must not be vacuous
}

TEST_CASE("transferral completeness") {
    CHECK(transferral_complete({{1, -1, 0}, {0, 1, -1}}, 3));
    CHECK_FALSE(transferral_complete({{2, -2}}, 2));
    CHECK(transferral_complete({{1, -1}}, 2));  // profile (1,2) difference step
}

TEST_CASE("coprime part-size differences generate every transferral") {
    int tested = 0;
    for (const auto& profile : small_profiles(10)) {
        long long g = 0;
        for (size_t i = 1; i < profile.size(); ++i)
            g = std::gcd(g, static_cast<long long>(profile[i] - profile[i - 1]));
        if (g != 1) continue;  // includes the all-equal profiles
        ++tested;
        CHECK(transferral_complete(pairwise_difference_vectors(profile), 2));
    }
    CHECK(tested > 50);
}

TEST_CASE("robust vectors") {
    auto host = oracles::complete_graph(3, 12);
    std::vector<std::vector<Vertex>> halves{{0, 1, 2, 3, 4, 5},
                                            {6, 7, 8, 9, 10, 11}};
    Hypergraph single(3, 3);
    single.add_edge({0, 1, 2});

    auto robust = robust_vectors(host, halves, single, Rat(1, 1000));
    CHECK(robust.count({2, 1}));
    CHECK(robust.count({1, 2}));
    CHECK(robust.count({3, 0}));
    CHECK(robust.count({0, 3}));

    // Raising mu only shrinks the set.
    auto tighter = robust_vectors(host, halves, single, Rat(1, 10));
    for (const auto& v : tighter) CHECK(robust.count(v));

    auto everything = robust_vectors(host, halves, single, Rat(0));
    CHECK(everything.size() == 4);

    CHECK(robust_vectors(Hypergraph(3, 6), {{0, 1, 2}, {3, 4, 5}}, single, Rat(0))
              .empty());
}

TEST_SUITE_END();
