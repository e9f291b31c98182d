#include "tilelab/partite.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace tilelab {

namespace {

constexpr int kMaxRealizationVertices = 24;

// Every two vertices inside an edge must land in different classes, so a
// realization is exactly a proper coloring of the co-occurrence graph with
// k colors, all of them used. Enumeration is symmetry-broken: a vertex may
// open color c only if colors 0..c-1 are already in use, which visits each
// unordered partition once.
struct RealizationSearch {
    const Hypergraph& f;
    int k;
    int n;
    std::vector<uint32_t> adj;      // co-occurrence masks
    std::vector<Vertex> order;      // decreasing degree
    std::vector<int> color_of;      // by vertex
    std::vector<uint32_t> members;  // vertices per color
    const std::function<void(const Realization&)>& visit;
    Budget& nodes;

    RealizationSearch(const Hypergraph& f_,
                      const std::function<void(const Realization&)>& visit_,
                      Budget& nodes_)
        : f(f_), k(f_.k()), n(f_.n()), adj(n, 0), color_of(n, -1),
          members(k, 0), visit(visit_), nodes(nodes_) {
        for (const auto& e : f.edges())
            for (Vertex u : e)
                for (Vertex v : e)
                    if (u != v) adj[u] |= (1u << v);
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<long long> deg(n);
        for (Vertex v = 0; v < n; ++v) deg[v] = f.vertex_degree(v);
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    }

    void emit() {
        Realization blocks;
        for (int c = 0; c < k; ++c) {
            std::vector<Vertex> block;
            for (Vertex v = 0; v < n; ++v)
                if (members[c] & (1u << v)) block.push_back(v);
            blocks.push_back(std::move(block));
        }
        std::sort(blocks.begin(), blocks.end(),
                  [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a.front() < b.front();
                  });
        visit(blocks);
    }

    void run(int pos, int used_colors) {
        nodes.spend();
        if (pos == n) {
            if (used_colors == k) emit();
            return;
        }
        // Not enough vertices left to open the remaining colors.
        if (k - used_colors > n - pos) return;
        Vertex v = order[pos];
        int limit = std::min(k, used_colors + 1);
        for (int c = 0; c < limit; ++c) {
            if (adj[v] & members[c]) continue;
            color_of[v] = c;
            members[c] |= (1u << v);
            run(pos + 1, std::max(used_colors, c + 1));
            members[c] &= ~(1u << v);
            color_of[v] = -1;
        }
    }
};

}  // namespace

void for_each_realization(const Hypergraph& f,
                          const std::function<void(const Realization&)>& visit,
                          long long budget) {
    if (f.edge_count() == 0)
        fail(ErrorCode::not_partite,
             "pattern has no edges; k-partiteness is not decidable");
    if (f.n() > kMaxRealizationVertices)
        fail(ErrorCode::resource,
             "realization search supports at most " +
                 std::to_string(kMaxRealizationVertices) + " vertices");
    Budget nodes(budget);
    RealizationSearch search(f, visit, nodes);
    search.run(0, 0);
}

std::set<Realization> realizations(const Hypergraph& f, long long budget) {
    std::set<Realization> out;
    for_each_realization(f, [&](const Realization& r) { out.insert(r); }, budget);
    return out;
}

InvariantReport structural_invariants(const Hypergraph& f, long long budget) {
    InvariantReport report;
    long long count = 0;
    for_each_realization(
        f,
        [&](const Realization& r) {
            ++count;
            for (size_t i = 0; i < r.size(); ++i) {
                report.s_set.insert(static_cast<int>(r[i].size()));
                for (size_t j = i; j < r.size(); ++j)
                    report.d_set.insert(std::abs(static_cast<int>(r[i].size()) -
                                                 static_cast<int>(r[j].size())));
            }
        },
        budget);
    if (count == 0)
        fail(ErrorCode::not_partite,
             "pattern is not " + std::to_string(f.k()) +
                 "-partite: exhaustive search over all vertex partitions found "
                 "no realization");

    long long g = 0;
    for (int d : report.d_set)
        if (d != 0) g = std::gcd(g, static_cast<long long>(d));
    if (g != 0) report.gcd_f = g;
    report.sigma = Rat(*report.s_set.begin(), f.n());
    report.tau = vertex_cover_number(f, budget);
    return report;
}

namespace {

struct CoverSearch {
    const std::vector<uint32_t>& edges;
    int n;
    int best;
    Budget& nodes;

    // Lower bound: a greedy family of pairwise disjoint uncovered edges,
    // each needing its own cover vertex.
    int lower_bound(uint32_t chosen) const {
        uint32_t blocked = 0;
        int lb = 0;
        for (uint32_t e : edges) {
            if (e & chosen) continue;
            if (e & blocked) continue;
            blocked |= e;
            ++lb;
        }
        return lb;
    }

    void run(uint32_t chosen, int size) {
        nodes.spend();
        if (size + lower_bound(chosen) >= best) return;
        const uint32_t* uncovered = nullptr;
        for (const uint32_t& e : edges)
            if (!(e & chosen)) { uncovered = &e; break; }
        if (!uncovered) {
            best = size;
            return;
        }
        for (int v = 0; v < n; ++v)
            if (*uncovered & (1u << v)) run(chosen | (1u << v), size + 1);
    }
};

}  // namespace

int vertex_cover_number(const Hypergraph& f, long long budget) {
    if (f.n() > kMaxRealizationVertices)
        fail(ErrorCode::resource, "vertex cover search supports at most " +
                                      std::to_string(kMaxRealizationVertices) +
                                      " vertices");
    if (f.edge_count() == 0) return 0;
    std::vector<uint32_t> masks;
    for (const auto& e : f.edges()) {
        uint32_t m = 0;
        for (Vertex v : e) m |= (1u << v);
        masks.push_back(m);
    }
    Budget nodes(budget);
    CoverSearch search{masks, f.n(), f.n() + 1, nodes};
    search.run(0, 0);
    return search.best;
}

}  // namespace tilelab
