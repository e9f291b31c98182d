#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilelab/hypergraph.hpp"
#include "tilelab/rational.hpp"

namespace tilelab {

// Weight assignment on vertex-edge incidences together with, for each
// weighted edge, a vertex ordering certifying the chain conditions
// h(v1) <= ... <= h(vk) and h(v1)/a1 >= ... >= h(vk)/ak.
//
// These assignments live on small hosts (typically cluster graphs).
// Converting them into integer tilings of a large ambient graph needs
// regularity machinery and is out of scope here; this module validates,
// constructs and maximizes the assignments themselves.
struct FractionalTiling {
    std::map<std::pair<Vertex, int>, Rat> weights;  // (vertex, edge index)
    std::map<int, std::vector<Vertex>> labelings;
};

struct FractionalReport {
    bool valid = false;
    Rat weight;
    std::optional<Rat> h_min;  // absent means infinity (all weights zero)
    std::string reason;        // first violated condition when invalid
};

// Checks the three conditions against L and the profile divisors. Entries
// on non-incident pairs are a structural error, distinct from an invalid
// but well-formed assignment.
FractionalReport validate(const Hypergraph& l, const PartiteProfile& profile,
                          const FractionalTiling& h);

// The weighting on complete_partite(profile) that gives every vertex
// total weight exactly 1: the small-class vertex of each edge receives
// 1/b^(k-1), the rest 1/(a*b^(k-2)). Profile shape (a, b,...,b), a < b.
FractionalTiling standard_weights(const PartiteProfile& profile);

// The weighting on khat_extension(profile): the extra edge is weighted,
// one original edge through its anchor vertex is dropped, and the rest
// keep standard weights. Total weight m - m/(a*b^(k-1)) + m/(a^2*b^(k-2)).
FractionalTiling extended_weights(const PartiteProfile& profile);

// Exact maximum-weight assignment on a small host: one rational LP per
// choice of per-edge vertex ordering, maximized over all choices.
std::pair<FractionalTiling, Rat> maximize_small(
    const Hypergraph& l, const PartiteProfile& profile,
    long long budget = kDefaultBudget);

}  // namespace tilelab
