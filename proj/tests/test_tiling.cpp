#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "tilelab/tiling.hpp"

using namespace tilelab;

namespace {

Hypergraph k112() { return complete_partite(PartiteProfile({1, 1, 2})); }

Hypergraph fano() {
    Hypergraph h(3, 7);
    for (auto e : {Edge{0, 1, 2}, Edge{0, 3, 4}, Edge{0, 5, 6}, Edge{1, 3, 5},
                   Edge{1, 4, 6}, Edge{2, 3, 6}, Edge{2, 4, 5}})
        h.add_edge(e);
    return h;
}

// Two vertex-disjoint copies of F plus `extra` isolated vertices.
Hypergraph two_copies_plus(const Hypergraph& f, int extra) {
    Hypergraph h(f.k(), 2 * f.n() + extra);
    for (const auto& e : f.edges()) {
        h.add_edge(e);
        Edge shifted;
        for (Vertex v : e) shifted.push_back(v + f.n());
        h.add_edge(shifted);
    }
    return h;
}

}  // namespace

TEST_SUITE_BEGIN("tiling");

TEST_CASE("a pattern spans itself") {
    for (const Hypergraph& f : {loose_cycle(3, 3), k112(), loose_path(4, 2)}) {
        auto copies = enumerate_copies(f, f);
        REQUIRE(copies.size() == 1);
        CHECK(static_cast<int>(copies[0].vertices.size()) == f.n());
        auto cert = has_perfect_tiling(f, f);
        REQUIRE(cert.has_value());
        CHECK(cert->copies.size() == 1);
        CHECK(verify_certificate(f, f, *cert));
    }
}

TEST_CASE("copy sets in small hosts") {
    CHECK(enumerate_copies(oracles::complete_graph(3, 4), k112()).size() == 1);
    CHECK(enumerate_copies(loose_cycle(3, 2), k112()).size() == 1);
    CHECK(enumerate_copies(Hypergraph(3, 6), k112()).empty());
}

TEST_CASE("witnesses embed and are lexicographically least") {
    auto host = oracles::complete_graph(3, 5);
    auto pattern = k112();
    for (const auto& copy : enumerate_copies(host, pattern)) {
        for (const auto& e : pattern.edges()) {
            Edge img;
            for (Vertex v : e) img.push_back(copy.embedding[v]);
            std::sort(img.begin(), img.end());
            CHECK(host.has_edge(img));
        }
        // The first two pattern vertices are interchangeable, so the least
        // witness keeps them sorted.
        CHECK(copy.embedding[0] < copy.embedding[1]);
        CHECK(copy.embedding[2] < copy.embedding[3]);
    }
}

TEST_CASE("perfect tilings of complete partite hosts") {
    auto cert = has_perfect_tiling(complete_partite(PartiteProfile({2, 3, 3})),
                                   k112());
    REQUIRE(cert.has_value());
    CHECK(cert->copies.size() == 2);
    CHECK(cert->covered == 8);
    CHECK(verify_certificate(complete_partite(PartiteProfile({2, 3, 3})), k112(),
                             *cert));
}

TEST_CASE("divisibility is required") {
    CHECK_THROWS_AS(has_perfect_tiling(oracles::complete_graph(3, 6), k112()),
                    Error);
}

TEST_CASE("max tiling") {
    auto f = k112();
    auto h = two_copies_plus(f, 1);
    auto cert = max_tiling(h, f);
    CHECK(cert.copies.size() == 2);
    CHECK(cert.covered == 8);
    CHECK(verify_certificate(h, f, cert));

    CHECK(max_tiling(Hypergraph(3, 8), f).copies.empty());
}

TEST_CASE("perfect tiling exists iff the maximum tiling covers everything") {
    for (const Hypergraph& h :
         {complete_partite(PartiteProfile({2, 3, 3})), two_copies_plus(k112(), 0),
          oracles::complete_graph(3, 8), loose_cycle(3, 4), Hypergraph(3, 4)}) {
        if (h.n() % 4 != 0) continue;
        bool perfect = has_perfect_tiling(h, k112()).has_value();
        CHECK(perfect == (max_tiling(h, k112()).covered == h.n()));
    }
}

TEST_CASE("certificate verification rejects tampering") {
    auto host = complete_partite(PartiteProfile({2, 3, 3}));
    auto cert = *has_perfect_tiling(host, k112());
    auto broken = cert;
    broken.copies[0].embedding[0] = broken.copies[0].embedding[1];
    CHECK_FALSE(verify_certificate(host, k112(), broken));
    broken = cert;
    broken.copies[1] = broken.copies[0];
    CHECK_FALSE(verify_certificate(host, k112(), broken));
    broken = cert;
    broken.covered += 1;
    CHECK_FALSE(verify_certificate(host, k112(), broken));
}

TEST_CASE("subgraph freeness") {
    CHECK_FALSE(is_subgraph_free(oracles::complete_graph(3, 4), k112()));
    CHECK(is_subgraph_free(Hypergraph(3, 6), k112()));
    CHECK(is_subgraph_free(fano(), k112()));  // pair degrees are all 1
}

TEST_CASE("solver answers are invariant under relabeling") {
    std::mt19937 rng(4242);
    auto host = complete_partite(PartiteProfile({2, 3, 3}));
    std::vector<Vertex> perm(host.n());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        auto permuted = oracles::relabel(host, perm);
        auto copies_host = enumerate_copies(host, k112());
        auto copies_perm = enumerate_copies(permuted, k112());
        std::set<std::vector<Vertex>> mapped;
        for (const auto& c : copies_host) {
            std::vector<Vertex> img;
            for (Vertex v : c.vertices) img.push_back(perm[v]);
            std::sort(img.begin(), img.end());
            mapped.insert(img);
        }
        std::set<std::vector<Vertex>> direct;
        for (const auto& c : copies_perm) direct.insert(c.vertices);
        CHECK(mapped == direct);
        CHECK(max_tiling(host, k112()).covered ==
              max_tiling(permuted, k112()).covered);
        CHECK(has_perfect_tiling(host, k112()).has_value() ==
              has_perfect_tiling(permuted, k112()).has_value());
    }
}

TEST_CASE("witnesses are minimal among all embeddings onto their set") {
    auto host = complete_partite(PartiteProfile({2, 3, 3}));
    auto pattern = k112();
    for (const auto& copy : enumerate_copies(host, pattern)) {
        // Oracle: scan every injective map onto the copy's vertex set.
        std::vector<Vertex> perm = copy.vertices;
        std::sort(perm.begin(), perm.end());
        std::optional<Embedding> least;
        do {
            bool ok = true;
            for (const auto& e : pattern.edges()) {
                Edge img;
                for (Vertex v : e) img.push_back(perm[v]);
                std::sort(img.begin(), img.end());
                if (!host.has_edge(img)) { ok = false; break; }
            }
            if (ok && (!least || perm < *least)) least = perm;
        } while (std::next_permutation(perm.begin(), perm.end()));
        REQUIRE(least.has_value());
        CHECK(copy.embedding == *least);
    }
}

TEST_CASE("perfect-tiling certificates are the lexicographically least cover") {
    auto host = complete_partite(PartiteProfile({2, 3, 3}));
    auto pattern = k112();
    auto copies = enumerate_copies(host, pattern);
    auto cert = has_perfect_tiling(host, pattern);
    REQUIRE(cert.has_value());

    // Oracle: collect every cover (each one picks some set through the
    // smallest uncovered vertex, so the recursion is exhaustive).
    std::vector<std::vector<std::vector<Vertex>>> covers;
    std::vector<std::vector<Vertex>> partial;
    auto all_covers = [&](auto&& self, std::set<Vertex> uncovered) -> void {
        if (uncovered.empty()) {
            auto family = partial;
            std::sort(family.begin(), family.end());
            covers.push_back(std::move(family));
            return;
        }
        Vertex target = *uncovered.begin();
        for (const auto& copy : copies) {
            if (!std::binary_search(copy.vertices.begin(), copy.vertices.end(),
                                    target))
                continue;
            bool fits = true;
            for (Vertex v : copy.vertices)
                if (!uncovered.count(v)) { fits = false; break; }
            if (!fits) continue;
            auto rest = uncovered;
            for (Vertex v : copy.vertices) rest.erase(v);
            partial.push_back(copy.vertices);
            self(self, std::move(rest));
            partial.pop_back();
        }
    };
    std::set<Vertex> everything;
    for (Vertex v = 0; v < host.n(); ++v) everything.insert(v);
    all_covers(all_covers, std::move(everything));
    REQUIRE(!covers.empty());
    std::sort(covers.begin(), covers.end());
    std::vector<std::vector<Vertex>> found;
    for (const auto& copy : cert->copies) found.push_back(copy.vertices);
    std::sort(found.begin(), found.end());
    CHECK(found == covers.front());
}

TEST_CASE("maximum packing matches a subset-scan oracle") {
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 8 + static_cast<int>(rng() % 3);
        Hypergraph h(3, n);
        int edges = 8 + static_cast<int>(rng() % 15);
        for (int i = 0; i < edges; ++i) {
            Edge e;
            while (static_cast<int>(e.size()) < 3) {
                Vertex v = static_cast<Vertex>(rng() % n);
                if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
            }
            h.add_edge(e);
        }
        auto copies = enumerate_copies(h, k112());
        if (copies.size() > 22) continue;
        size_t best = 0;
        for (unsigned long mask = 0; mask < (1ul << copies.size()); ++mask) {
            uint64_t used = 0;
            bool disjoint = true;
            size_t picked = 0;
            for (size_t i = 0; i < copies.size() && disjoint; ++i) {
                if (!(mask & (1ul << i))) continue;
                uint64_t m = 0;
                for (Vertex v : copies[i].vertices) m |= (1ULL << v);
                if (m & used) disjoint = false;
                used |= m;
                ++picked;
            }
            if (disjoint) best = std::max(best, picked);
        }
        CHECK(max_tiling(h, k112()).copies.size() == best);
    }
}

TEST_CASE("oversized patterns have no copies") {
    CHECK(enumerate_copies(loose_cycle(3, 2),
                           complete_partite(PartiteProfile({2, 3, 3})))
              .empty());
}

TEST_CASE("symmetry-reduced enumeration finds the same image sets") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        Hypergraph h(3, n);
        int edges = 6 + static_cast<int>(rng() % 20);
        for (int i = 0; i < edges; ++i) {
            Edge e;
            while (static_cast<int>(e.size()) < 3) {
                Vertex v = static_cast<Vertex>(rng() % n);
                if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
            }
            h.add_edge(e);
        }
        for (const Hypergraph& f : {k112(), loose_path(3, 2)}) {
            std::set<std::vector<Vertex>> reduced, full;
            for (const auto& c : enumerate_copies(h, f)) reduced.insert(c.vertices);
            for_each_embedding(
                h, f,
                [&](const Embedding& phi) {
                    std::vector<Vertex> img(phi.begin(), phi.end());
                    std::sort(img.begin(), img.end());
                    full.insert(img);
                    return true;
                },
                kDefaultBudget, /*image_set_reduced=*/false);
            CHECK(reduced == full);
        }
    }
}

TEST_CASE("exact Turan numbers for the smallest partite pattern") {
    CHECK(turan_brute(4, k112()) == 1);
    CHECK(turan_brute(5, k112()) == 2);
    for (int n = 3; n <= 6; ++n)
        CHECK(turan_brute(n, k112()) <= n * (n - 1) / 2 / 3);
    // Pair degrees are at most 1 in a feasible graph, so C(7,2)/3 = 7 is an
    // upper bound; the point system on 7 vertices attains it.
    CHECK(turan_brute(7, k112(), 500'000'000) == 7);
    CHECK_FALSE(is_subgraph_free(fano(), loose_path(3, 2)));
}

TEST_CASE("Turan of a single edge is zero") {
    Hypergraph single(3, 3);
    single.add_edge({0, 1, 2});
    CHECK(turan_brute(5, single) == 0);
    CHECK(coex_brute(5, single).value == 0);
}

TEST_CASE("pruned and exhaustive Turan searches agree on tiny hosts") {
    for (const Hypergraph& f : {k112(), loose_path(3, 2)}) {
        for (int n = 3; n <= 5; ++n) {
            CHECK(turan_brute(n, f, kDefaultBudget, true) ==
                  turan_brute(n, f, kDefaultBudget, false));
            CHECK(coex_brute(n, f, kDefaultBudget, true).value ==
                  coex_brute(n, f, kDefaultBudget, false).value);
        }
    }
}

TEST_CASE("codegree Turan numbers") {
    auto r5 = coex_brute(5, k112());
    CHECK(r5.value == 0);
    CHECK(is_subgraph_free(r5.witness, k112()));

    auto r6 = coex_brute(6, k112());
    CHECK(r6.value == 0);

    // coex * binom(n,2) / 3 <= ex at every computed point.
    for (int n = 4; n <= 6; ++n) {
        long long ex = turan_brute(n, k112());
        long long co = coex_brute(n, k112()).value;
        CHECK(Rat(co * n * (n - 1) / 2, 3) <= Rat(ex));
    }
}

TEST_CASE("steiner system check") {
    CHECK(is_steiner_system(fano(), 2));
    Hypergraph single(3, 3);
    single.add_edge({0, 1, 2});
    CHECK(is_steiner_system(single, 2));
    CHECK_FALSE(is_steiner_system(loose_cycle(3, 2), 2));
    CHECK_THROWS_AS(is_steiner_system(fano(), 3), Error);
}

TEST_CASE("extremal deficit") {
    CHECK(extremal_deficit(oracles::complete_graph(3, 6), Rat(1, 4)) == Rat(1));
    CHECK(extremal_deficit(Hypergraph(3, 8), Rat(1, 4)) == Rat(0));

    std::vector<Vertex> wrong_size{0, 1};
    CHECK_THROWS_AS(extremal_deficit(oracles::complete_graph(3, 6), Rat(1, 4),
                                     wrong_size),
                    Error);
}

TEST_CASE("budgets bound the searches") {
    CHECK_THROWS_AS(enumerate_copies(oracles::complete_graph(3, 8), k112(), 50),
                    Error);
    CHECK_THROWS_AS(turan_brute(5, k112(), 20), Error);
}

TEST_SUITE_END();
