#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tilelab/hypergraph.hpp"

namespace tilelab {

// Machine-checkable claims attached to a generated lower-bound host.
// Freeness claims are obligations for the tiling solver, not facts this
// module verifies.
struct ConstructionCertificate {
    std::vector<Vertex> set_a;
    std::vector<Vertex> set_b;
    long long claimed_min_codegree = 0;
    std::vector<std::vector<int>> freeness_claims;  // forbidden profiles
    std::string notes;
};

// Host whose edges are exactly the k-sets meeting a set A of
// tau(F)*n/m - 1 vertices; each copy of F must spend tau(F) vertices in A,
// so no perfect F-tiling exists.
std::pair<Hypergraph, ConstructionCertificate> space_barrier(
    const Hypergraph& pattern, int n, long long budget = kDefaultBudget);

// Space barrier for a complete k-partite pattern, strengthened by an
// arbitrary graph G placed on the B side. The certificate lists the
// profiles G must avoid for the construction to block perfect tilings.
std::pair<Hypergraph, ConstructionCertificate> strengthened_barrier(
    const PartiteProfile& profile, int n, const Hypergraph& inner);

// Finite-field construction: vertices are scaling classes of pairs over
// F_q*, and k classes form an edge when the two coordinatewise products
// sum into the order-(t-1) subgroup.
std::pair<Hypergraph, ConstructionCertificate> mubayi_graph(int k, int t,
                                                            long long q);

// For checking that the edge relation does not depend on the chosen class
// representatives: all members of the vertex's scaling class.
std::vector<std::vector<std::pair<long long, long long>>> mubayi_classes(
    int t, long long q);

// G plus every k-set whose intersection with A has even size.
Hypergraph parity_construction(const Hypergraph& g,
                               const std::vector<Vertex>& set_a);

}  // namespace tilelab
