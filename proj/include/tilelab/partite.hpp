#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "tilelab/hypergraph.hpp"
#include "tilelab/rational.hpp"

namespace tilelab {

// A partition of the pattern's vertices into k nonempty classes such that
// every edge meets every class exactly once. Blocks are sorted internally
// and ordered by (size, smallest element), which is a total order since
// blocks are disjoint.
using Realization = std::vector<std::vector<Vertex>>;

struct InvariantReport {
    std::set<int> s_set;             // class sizes over all realizations
    std::set<int> d_set;             // pairwise size differences, per realization
    std::optional<long long> gcd_f;  // gcd of d_set; absent when d_set == {0}
    Rat sigma;                       // min(s_set) / |V(F)|
    int tau = 0;                     // vertex cover number
};

// Streams every realization of F exactly once, in a deterministic order.
// F must have at least one edge and at most 24 vertices.
void for_each_realization(const Hypergraph& f,
                          const std::function<void(const Realization&)>& visit,
                          long long budget = kDefaultBudget);

// All realizations, deduplicated; empty when F is not k-partite.
std::set<Realization> realizations(const Hypergraph& f,
                                   long long budget = kDefaultBudget);

// S(F), D(F), gcd, sigma and tau in one pass. Fails with a not-partite
// error when the realization search comes up empty.
InvariantReport structural_invariants(const Hypergraph& f,
                                      long long budget = kDefaultBudget);

// Exact minimum hitting-set size, branch and bound.
int vertex_cover_number(const Hypergraph& f, long long budget = kDefaultBudget);

}  // namespace tilelab
