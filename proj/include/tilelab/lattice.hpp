#pragma once

#include <set>
#include <vector>

#include "tilelab/hypergraph.hpp"
#include "tilelab/rational.hpp"

namespace tilelab {

using IndexVector = std::vector<long long>;

// Coordinate i is |S intersect parts[i]|. S must be covered by the parts.
IndexVector index_vector(const std::vector<std::vector<Vertex>>& parts,
                         const std::vector<Vertex>& set);

// Integer span of a generator set, kept as a triangular basis so that
// membership queries are exact integer reductions.
class IntegerLattice {
public:
    explicit IntegerLattice(int dimension);

    void add(IndexVector v);
    bool contains(IndexVector v) const;

    int dimension() const { return dim_; }

private:
    int dim_;
    std::vector<IndexVector> basis_;  // basis_[c] has pivot at column c, or empty
};

bool lattice_contains(const std::vector<IndexVector>& generators,
                      const IndexVector& target);

// True iff u_i - u_j lies in the generated lattice for every i < j.
bool transferral_complete(const std::vector<IndexVector>& generators, int r);

// Index vectors of pattern copies that occur robustly: an m-vector is
// reported when the number of spanning embeddings realizing it reaches
// mu * n^m. Copies are counted labeled.
std::set<IndexVector> robust_vectors(const Hypergraph& host,
                                     const std::vector<std::vector<Vertex>>& parts,
                                     const Hypergraph& pattern, const Rat& mu,
                                     long long budget = kDefaultBudget);

}  // namespace tilelab
