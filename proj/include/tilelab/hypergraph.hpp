#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tilelab/errors.hpp"

namespace tilelab {

using Vertex = int;
using Edge = std::vector<Vertex>;  // k distinct vertices, sorted ascending

// k-uniform hypergraph on vertices 0..n-1. Edges are kept sorted
// lexicographically and deduplicated, so two hypergraphs compare equal
// exactly when they have the same vertex range and edge set.
class Hypergraph {
public:
    Hypergraph(int k, int n);
    Hypergraph(int k, int n, std::vector<Edge> edges);

    int k() const { return k_; }
    int n() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Inserts a copy of `e` (any vertex order); re-inserting is a no-op.
    void add_edge(Edge e);
    bool has_edge(const Edge& sorted_edge) const;

    // Number of edges of this hypergraph containing v.
    long long vertex_degree(Vertex v) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int k_;
    int n_;
    std::vector<Edge> edges_;
};

// Part sizes (a1,...,ak) of a complete k-partite pattern, sorted
// nondecreasing, all positive.
struct PartiteProfile {
    std::vector<int> sizes;

    explicit PartiteProfile(std::vector<int> s);

    int k() const { return static_cast<int>(sizes.size()); }
    int m() const;  // sum of the part sizes

    friend bool operator==(const PartiteProfile&, const PartiteProfile&) = default;
};

// Part layout used by the generators below: part i occupies the next
// sizes[i] vertex indices, starting at 0.
std::vector<std::vector<Vertex>> profile_parts(const PartiteProfile& profile);

// Complete k-partite k-graph: all transversals (one vertex per part).
Hypergraph complete_partite(const PartiteProfile& profile);

// Loose cycle with s edges on s(k-1) vertices: edge j covers
// {j(k-1), ..., j(k-1)+k-1} with indices wrapping modulo s(k-1).
Hypergraph loose_cycle(int k, int s);

// Loose path with s edges on s(k-1)+1 vertices (no wrap edge).
Hypergraph loose_path(int k, int s);

// For a profile of shape (a, b,...,b) with a < b: the complete k-partite
// graph extended by k-1 fresh vertices and one extra edge through the
// first vertex of the second part.
Hypergraph khat_extension(const PartiteProfile& profile);

// Edges containing all of S. Requires |S| <= k and S within range.
long long degree_of_set(const Hypergraph& h, std::span<const Vertex> set);

// Minimum of degree_of_set over all d-subsets of the vertex set,
// 1 <= d <= k-1. Zero when some d-set lies in no edge.
long long min_d_degree(const Hypergraph& h, int d,
                       long long budget = kDefaultBudget);

// Exhaustive isomorphism test, intended for small instances (n <= 12).
bool are_isomorphic(const Hypergraph& a, const Hypergraph& b,
                    long long budget = kDefaultBudget);

// Text format: first non-comment line "k n", then one edge per line as
// k ascending vertex ids separated by single spaces. Lines starting with
// '#' are comments. A trailing newline is required.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);
void write_hg(std::ostream& out, const Hypergraph& h,
              const std::vector<std::string>& comments = {});
void write_hg_file(const std::string& path, const Hypergraph& h,
                   const std::vector<std::string>& comments = {});

// First "#certificate ..." comment payload of an .hg file, if present.
std::string read_hg_certificate(const std::string& path);

}  // namespace tilelab
