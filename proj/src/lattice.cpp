#include "tilelab/lattice.hpp"

#include <algorithm>
#include <map>

#include "tilelab/tiling.hpp"

namespace tilelab {

IndexVector index_vector(const std::vector<std::vector<Vertex>>& parts,
                         const std::vector<Vertex>& set) {
    std::map<Vertex, int> part_of;
    for (size_t i = 0; i < parts.size(); ++i)
        for (Vertex v : parts[i]) {
            if (part_of.count(v))
                fail(ErrorCode::domain, "parts are not disjoint");
            part_of[v] = static_cast<int>(i);
        }
    IndexVector coords(parts.size(), 0);
    for (Vertex v : set) {
        auto it = part_of.find(v);
        if (it == part_of.end())
            fail(ErrorCode::domain,
                 "vertex " + std::to_string(v) + " not covered by the partition");
        ++coords[it->second];
    }
    return coords;
}

IntegerLattice::IntegerLattice(int dimension) : dim_(dimension) {
    if (dimension < 1) fail(ErrorCode::domain, "dimension must be positive");
    basis_.resize(dimension);
}

void IntegerLattice::add(IndexVector v) {
    if (static_cast<int>(v.size()) != dim_)
        fail(ErrorCode::domain, "vector dimension mismatch");
    for (int c = 0; c < dim_; ++c) {
        if (v[c] == 0) continue;
        if (basis_[c].empty()) {
            if (v[c] < 0)
                for (auto& x : v) x = -x;
            basis_[c] = std::move(v);
            return;
        }
        // Combine with the pivot row so the column entry becomes
        // gcd(pivot, v[c]); the leftover keeps reducing to the right.
        IndexVector& row = basis_[c];
        while (v[c] != 0) {
            long long q = v[c] / row[c];
            for (int j = 0; j < dim_; ++j) v[j] -= q * row[j];
            if (v[c] != 0) std::swap(row, v);
        }
    }
}

bool IntegerLattice::contains(IndexVector v) const {
    if (static_cast<int>(v.size()) != dim_)
        fail(ErrorCode::domain, "vector dimension mismatch");
    for (int c = 0; c < dim_; ++c) {
        if (v[c] == 0) continue;
        if (basis_[c].empty() || v[c] % basis_[c][c] != 0) return false;
        long long q = v[c] / basis_[c][c];
        for (int j = 0; j < dim_; ++j) v[j] -= q * basis_[c][j];
    }
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

bool lattice_contains(const std::vector<IndexVector>& generators,
                      const IndexVector& target) {
    if (target.empty()) fail(ErrorCode::domain, "empty target vector");
    IntegerLattice lattice(static_cast<int>(target.size()));
    for (const auto& g : generators) lattice.add(g);
    return lattice.contains(target);
}

bool transferral_complete(const std::vector<IndexVector>& generators, int r) {
    if (r < 2) fail(ErrorCode::domain, "transferrals need r >= 2");
    IntegerLattice lattice(r);
    for (const auto& g : generators) lattice.add(g);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            IndexVector diff(r, 0);
            diff[i] = 1;
            diff[j] = -1;
            if (!lattice.contains(diff)) return false;
        }
    return true;
}

std::set<IndexVector> robust_vectors(const Hypergraph& host,
                                     const std::vector<std::vector<Vertex>>& parts,
                                     const Hypergraph& pattern, const Rat& mu,
                                     long long budget) {
    if (mu < Rat(0)) fail(ErrorCode::domain, "mu must be nonnegative");
    std::map<IndexVector, long long> counts;
    std::vector<Vertex> image;
    for_each_embedding(
        host, pattern,
        [&](const Embedding& phi) {
            image.assign(phi.begin(), phi.end());
            ++counts[index_vector(parts, image)];
            return true;
        },
        budget, /*image_set_reduced=*/false);

    Rat threshold = mu;
    for (int i = 0; i < pattern.n(); ++i) threshold *= Rat(host.n());
    std::set<IndexVector> out;
    for (const auto& [vec, count] : counts)
        if (Rat(count) >= threshold) out.insert(vec);
    return out;
}

}  // namespace tilelab
