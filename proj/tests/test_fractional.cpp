#include <doctest.h>

#include "oracles.hpp"
#include "tilelab/fractional.hpp"

using namespace tilelab;

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("fractional");

TEST_CASE("the zero assignment is valid with infinite minimum") {
    auto l = complete_partite(PartiteProfile({1, 2, 2}));
    auto report = validate(l, PartiteProfile({1, 2, 2}), FractionalTiling{});
    CHECK(report.valid);
    CHECK(report.weight == Rat(0));
    CHECK_FALSE(report.h_min.has_value());
}

TEST_CASE("standard weights on the smallest flat profile") {
    PartiteProfile p({1, 2, 2});
    auto h = standard_weights(p);
    auto l = complete_partite(p);
    for (int e = 0; e < 4; ++e) {
        CHECK(h.weights.at({0, e}) == Rat(1, 4));
        for (Vertex v : l.edges()[e])
            if (v != 0) CHECK(h.weights.at({v, e}) == Rat(1, 2));
    }
    auto report = validate(l, p, h);
    CHECK(report.valid);
    CHECK(report.weight == Rat(5));
    REQUIRE(report.h_min.has_value());
    CHECK(*report.h_min == Rat(1, 4));
}

TEST_CASE("standard weights across the whole parameter grid") {
    for (int k = 3; k <= 5; ++k)
        for (int b = 2; b <= 4; ++b)
            for (int a = 1; a < b; ++a) {
                std::vector<int> sizes{a};
                for (int i = 1; i < k; ++i) sizes.push_back(b);
                PartiteProfile p(sizes);
                auto l = complete_partite(p);
                auto h = standard_weights(p);
                auto report = validate(l, p, h);
                CHECK(report.valid);
                CHECK(report.weight == Rat(p.m()));
                // Every vertex carries total weight exactly one.
                std::vector<Rat> totals(l.n(), Rat(0));
                for (const auto& [key, w] : h.weights) totals[key.first] += w;
                for (Vertex v = 0; v < l.n(); ++v) CHECK(totals[v] == Rat(1));
            }
}

TEST_CASE("standard weights reject other shapes") {
    CHECK_THROWS_AS(standard_weights(PartiteProfile({1, 1, 2})), Error);
    CHECK_THROWS_AS(standard_weights(PartiteProfile({2, 2, 2})), Error);
}

TEST_CASE("extension weights match the closed form") {
    PartiteProfile p(std::vector<int>{1, 2, 2});
    auto l = khat_extension(p);
    auto h = extended_weights(p);
    auto report = validate(l, p, h);
    CHECK(report.valid);
    CHECK(report.weight == Rat(25, 4));  // 5 - 5/4 + 5/2
    CHECK(report.weight >= Rat(5) + Rat(1, 4));
    REQUIRE(report.h_min.has_value());
    CHECK(*report.h_min == Rat(1, 4));

    PartiteProfile p2(std::vector<int>{2, 3, 3});
    auto report2 = validate(khat_extension(p2), p2, extended_weights(p2));
    CHECK(report2.valid);
    CHECK(report2.weight == Rat(8) + Rat(2, 9));  // 8 - 8/18 + 8/12
    CHECK(report2.weight >= Rat(8) + Rat(1, 18));
}

TEST_CASE("extension weights across the parameter grid") {
    for (int k = 3; k <= 5; ++k)
        for (int b = 2; b <= 4; ++b)
            for (int a = 1; a < b; ++a) {
                std::vector<int> sizes{a};
                for (int i = 1; i < k; ++i) sizes.push_back(b);
                PartiteProfile p(sizes);
                long long m = p.m();
                auto report = validate(khat_extension(p), p, extended_weights(p));
                CHECK(report.valid);
                Rat expected = Rat(m) - Rat(m, a * ipow(b, k - 1)) +
                               Rat(m, static_cast<long long>(a) * a * ipow(b, k - 2));
                CHECK(report.weight == expected);
                CHECK(report.weight >= Rat(m) + Rat(1, a * ipow(b, k - 1)));
                REQUIRE(report.h_min.has_value());
                CHECK(*report.h_min == Rat(1, ipow(b, k - 1)));
            }
}

TEST_CASE("capacity violations are invalid, non-incidences are structural") {
    PartiteProfile p({1, 2, 2});
    auto l = complete_partite(p);
    FractionalTiling h;
    h.weights[{0, 0}] = Rat(2);
    auto report = validate(l, p, h);
    CHECK_FALSE(report.valid);
    CHECK(report.reason.find("vertex 0") != std::string::npos);

    FractionalTiling bad;
    bad.weights[{4, 0}] = Rat(1, 2);  // vertex 4 is not on edge 0
    CHECK_THROWS_AS(validate(l, p, bad), Error);

    FractionalTiling negative;
    negative.weights[{0, 0}] = Rat(-1, 2);
    CHECK_FALSE(validate(l, p, negative).valid);
}

TEST_CASE("chain condition is checked against all labelings") {
    PartiteProfile p({1, 2, 2});
    auto l = complete_partite(p);
    // Put the large weight on the small-class vertex: no labeling then
    // satisfies both chains.
    FractionalTiling h;
    h.weights[{0, 0}] = Rat(1);
    h.weights[{1, 0}] = Rat(1, 4);
    h.weights[{3, 0}] = Rat(1, 4);
    auto report = validate(l, p, h);
    CHECK_FALSE(report.valid);
    CHECK(report.reason.find("labeling") != std::string::npos);
}

TEST_CASE("downscaling a valid assignment keeps it valid") {
    PartiteProfile p({1, 2, 2});
    auto l = khat_extension(p);
    auto h = extended_weights(p);
    for (Rat c : {Rat(1, 2), Rat(2, 3), Rat(1, 7), Rat(1)}) {
        FractionalTiling scaled = h;
        for (auto& [key, w] : scaled.weights) w *= c;
        auto report = validate(l, p, scaled);
        CHECK(report.valid);
        CHECK(report.weight == validate(l, p, h).weight * c);
    }
}

TEST_CASE("maximizer on a single edge reaches the capacity bound") {
    Hypergraph l(3, 3);
    l.add_edge({0, 1, 2});
    for (auto sizes : {std::vector<int>{1, 2, 2}, std::vector<int>{1, 1, 2},
                       std::vector<int>{2, 3, 4}}) {
        PartiteProfile p(sizes);
        auto [h, w] = maximize_small(l, p);
        CHECK(w == Rat(3));
        CHECK(validate(l, p, h).valid);
    }
}

TEST_CASE("maximizer saturates complete partite hosts") {
    PartiteProfile p({1, 2, 2});
    auto l = complete_partite(p);
    auto [h, w] = maximize_small(l, p);
    CHECK(w == Rat(5));  // capacity |V| reached by the standard weights
    auto report = validate(l, p, h);
    CHECK(report.valid);
    CHECK(report.weight == w);
}

TEST_CASE("maximizer on disjoint edges fills every component") {
    // Two vertex-disjoint edges: capacities decouple, so the optimum is 2k.
    Hypergraph l(3, 6);
    l.add_edge({0, 1, 2});
    l.add_edge({3, 4, 5});
    PartiteProfile p({1, 2, 2});
    auto [h, w] = maximize_small(l, p);
    CHECK(w == Rat(6));
    CHECK(validate(l, p, h).valid);
}

TEST_CASE("adding an edge never lowers the maximizer value") {
    PartiteProfile p({1, 2, 2});
    Hypergraph base(3, 5);
    base.add_edge({0, 1, 3});
    auto [h1, w1] = maximize_small(base, p);
    Hypergraph bigger = base;
    bigger.add_edge({0, 2, 4});
    auto [h2, w2] = maximize_small(bigger, p);
    bigger.add_edge({1, 2, 4});
    auto [h3, w3] = maximize_small(bigger, p);
    CHECK(w1 <= w2);
    CHECK(w2 <= w3);
}

TEST_CASE("maximizer output is deterministic") {
    PartiteProfile p({1, 2, 2});
    auto l = khat_extension(p);
    auto [h1, w1] = maximize_small(l, p);
    auto [h2, w2] = maximize_small(l, p);
    CHECK(w1 == w2);
    CHECK(h1.weights == h2.weights);
    CHECK(h1.labelings == h2.labelings);
}

TEST_CASE("maximizer dominates the extension weighting") {
    PartiteProfile p({1, 2, 2});
    auto l = khat_extension(p);
    auto [h, w] = maximize_small(l, p);
    CHECK(w >= Rat(25, 4));
    CHECK(w <= Rat(l.n()));  // vertex capacities cap the total
    CHECK(validate(l, p, h).valid);
}

TEST_SUITE_END();
