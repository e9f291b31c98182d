#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tilelab/hypergraph.hpp"
#include "tilelab/rational.hpp"

namespace tilelab {

// Host vertex image of each pattern vertex, indexed by pattern vertex id.
using Embedding = std::vector<Vertex>;

struct TilingCopy {
    std::vector<Vertex> vertices;  // sorted m-set spanned by the copy
    Embedding embedding;           // lexicographically least witness
};

struct TilingCertificate {
    std::vector<TilingCopy> copies;
    long long covered = 0;
};

// Visits every spanning embedding of F into H, i.e. every injective map
// taking edges of F to edges of H. With `image_set_reduced` the search
// yields exactly one embedding per image set that is canonical under
// swapping interchangeable pattern vertices (enough to enumerate copies);
// without it, all labeled embeddings are visited.
void for_each_embedding(const Hypergraph& host, const Hypergraph& pattern,
                        const std::function<bool(const Embedding&)>& visit,
                        long long budget = kDefaultBudget,
                        bool image_set_reduced = false);

// All m-subsets of V(H) spanning a copy of F, sorted, each with its
// lexicographically least witness embedding.
std::vector<TilingCopy> enumerate_copies(const Hypergraph& host,
                                         const Hypergraph& pattern,
                                         long long budget = kDefaultBudget);

// Exact cover of V(H) by copies of F; the returned certificate is the
// lexicographically least cover in copy-set order, or absent.
std::optional<TilingCertificate> has_perfect_tiling(
    const Hypergraph& host, const Hypergraph& pattern,
    long long budget = kDefaultBudget);

// Maximum-cardinality family of vertex-disjoint copies (branch and bound).
TilingCertificate max_tiling(const Hypergraph& host, const Hypergraph& pattern,
                             long long budget = kDefaultBudget);

bool is_subgraph_free(const Hypergraph& host, const Hypergraph& pattern,
                      long long budget = kDefaultBudget);

// Re-checks a certificate: pairwise disjoint copies whose stored witnesses
// are genuine embeddings onto their vertex sets.
bool verify_certificate(const Hypergraph& host, const Hypergraph& pattern,
                        const TilingCertificate& cert);

// Exact Turan number ex(n, F): maximum edge count of an F-free k-graph on
// n vertices. `prune` enables bounding and conflict propagation; the plain
// mode enumerates every F-free edge set and exists as a self-check.
long long turan_brute(int n, const Hypergraph& pattern,
                      long long budget = kDefaultBudget, bool prune = true);

struct CoexResult {
    long long value = 0;
    Hypergraph witness;
};

// Exact codegree Turan number coex(n, F) with a witness attaining it.
CoexResult coex_brute(int n, const Hypergraph& pattern,
                      long long budget = kDefaultBudget, bool prune = true);

// True iff every t-subset of the vertex set has degree exactly 1.
bool is_steiner_system(const Hypergraph& h, int t);

// Edge density e(B)/binom(|B|,k) of a vertex set B of size
// floor((1-sigma)n); when B is not supplied, the minimum over all such B.
Rat extremal_deficit(const Hypergraph& h, const Rat& sigma,
                     const std::optional<std::vector<Vertex>>& b = std::nullopt,
                     long long budget = kDefaultBudget);

}  // namespace tilelab
