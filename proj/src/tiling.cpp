#include "tilelab/tiling.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace tilelab {

namespace {

constexpr int kMaxPatternVertices = 12;
constexpr int kMaxSolverVertices = 64;

uint64_t to_mask(const std::vector<Vertex>& vs) {
    uint64_t m = 0;
    for (Vertex v : vs) m |= (1ULL << v);
    return m;
}

std::vector<Vertex> mask_vertices(uint64_t mask) {
    std::vector<Vertex> vs;
    while (mask) {
        int v = std::countr_zero(mask);
        vs.push_back(v);
        mask &= mask - 1;
    }
    return vs;
}

// Lex order on the ascending vertex lists behind two masks.
bool mask_lex_less(uint64_t a, uint64_t b) {
    while (a && b) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

long long binom_saturating(long long n, long long r, long long cap) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long v = 1;
    for (long long i = 0; i < r; ++i) {
        v = v * (n - i) / (i + 1);
        if (v > cap) return cap + 1;
    }
    return v;
}

void check_solver_input(const Hypergraph& host, const Hypergraph& pattern) {
    if (host.k() != pattern.k())
        fail(ErrorCode::domain, "host and pattern have different uniformity");
    if (host.n() > kMaxSolverVertices)
        fail(ErrorCode::resource, "solver supports hosts on at most 64 vertices");
    if (pattern.n() > kMaxPatternVertices)
        fail(ErrorCode::resource, "patterns are limited to 12 vertices");
}

struct HostIndex {
    int n;
    std::unordered_set<uint64_t> edge_masks;
    std::vector<long long> degree;

    explicit HostIndex(const Hypergraph& h) : n(h.n()), degree(h.n(), 0) {
        for (const auto& e : h.edges()) {
            edge_masks.insert(to_mask(e));
            for (Vertex v : e) ++degree[v];
        }
    }
};

struct PatternPlan {
    int m = 0;
    std::vector<long long> degree;           // pattern vertex degree
    std::vector<int> order;                  // search order of pattern vertices
    std::vector<std::vector<int>> completed; // per position, edges closing there
    std::vector<std::vector<int>> id_completed;  // same, for id order 0..m-1
    std::vector<int> cls;                    // interchangeability class per vertex
};

// Two pattern vertices are interchangeable when swapping them maps the
// edge set to itself; ordering their images removes most of the
// automorphism blow-up during enumeration.
bool swap_is_automorphism(const Hypergraph& f, Vertex u, Vertex v) {
    for (const auto& e : f.edges()) {
        Edge img;
        for (Vertex w : e) img.push_back(w == u ? v : (w == v ? u : w));
        std::sort(img.begin(), img.end());
        if (!f.has_edge(img)) return false;
    }
    return true;
}

PatternPlan make_plan(const Hypergraph& f) {
    PatternPlan plan;
    plan.m = f.n();
    plan.degree.assign(plan.m, 0);
    for (const auto& e : f.edges())
        for (Vertex v : e) ++plan.degree[v];

    // Order greedily so that each placement closes as many pattern edges
    // as possible, giving early edge checks during the search.
    std::vector<bool> placed(plan.m, false);
    for (int pos = 0; pos < plan.m; ++pos) {
        int best = -1;
        long long best_closed = -1, best_deg = -1;
        for (Vertex v = 0; v < plan.m; ++v) {
            if (placed[v]) continue;
            long long closed = 0;
            for (const auto& e : f.edges()) {
                if (std::find(e.begin(), e.end(), v) == e.end()) continue;
                bool complete = true;
                for (Vertex u : e)
                    if (u != v && !placed[u]) { complete = false; break; }
                if (complete) ++closed;
            }
            if (closed > best_closed ||
                (closed == best_closed && plan.degree[v] > best_deg)) {
                best = v;
                best_closed = closed;
                best_deg = plan.degree[v];
            }
        }
        placed[best] = true;
        plan.order.push_back(best);
    }

    auto completed_for = [&](const std::vector<int>& order) {
        std::vector<int> pos_of(plan.m);
        for (int i = 0; i < plan.m; ++i) pos_of[order[i]] = i;
        std::vector<std::vector<int>> completed(plan.m);
        for (size_t ei = 0; ei < f.edges().size(); ++ei) {
            int last = 0;
            for (Vertex v : f.edges()[ei]) last = std::max(last, pos_of[v]);
            completed[last].push_back(static_cast<int>(ei));
        }
        return completed;
    };
    plan.completed = completed_for(plan.order);
    std::vector<int> id_order(plan.m);
    std::iota(id_order.begin(), id_order.end(), 0);
    plan.id_completed = completed_for(id_order);

    plan.cls.assign(plan.m, -1);
    for (Vertex v = 0; v < plan.m; ++v) {
        if (plan.cls[v] >= 0) continue;
        plan.cls[v] = v;
        for (Vertex u = v + 1; u < plan.m; ++u)
            if (plan.cls[u] < 0 && plan.degree[u] == plan.degree[v] &&
                swap_is_automorphism(f, v, u))
                plan.cls[u] = v;
    }
    return plan;
}

struct EmbedSearch {
    const Hypergraph& pattern;
    const PatternPlan& plan;
    const HostIndex& host;
    bool reduced;
    Budget& nodes;
    const std::function<bool(const Embedding&)>& visit;

    Embedding phi;
    uint64_t used = 0;
    bool stopped = false;

    EmbedSearch(const Hypergraph& pat, const PatternPlan& pl,
                const HostIndex& ho, bool red, Budget& b,
                const std::function<bool(const Embedding&)>& vi)
        : pattern(pat), plan(pl), host(ho), reduced(red), nodes(b), visit(vi),
          phi(pl.m, -1) {}

    bool class_order_ok(Vertex p, Vertex h) const {
        for (Vertex q = 0; q < plan.m; ++q) {
            if (q == p || plan.cls[q] != plan.cls[p] || phi[q] < 0) continue;
            if (q < p ? phi[q] >= h : phi[q] <= h) return false;
        }
        return true;
    }

    bool edges_ok(int pos) const {
        for (int ei : plan.completed[pos]) {
            uint64_t img = 0;
            for (Vertex v : pattern.edges()[ei]) img |= (1ULL << phi[v]);
            if (!host.edge_masks.count(img)) return false;
        }
        return true;
    }

    void run(int pos) {
        if (stopped) return;
        if (pos == plan.m) {
            if (!visit(phi)) stopped = true;
            return;
        }
        Vertex p = plan.order[pos];
        for (Vertex h = 0; h < host.n && !stopped; ++h) {
            if (used & (1ULL << h)) continue;
            if (host.degree[h] < plan.degree[p]) continue;
            if (reduced && !class_order_ok(p, h)) continue;
            nodes.spend();
            phi[p] = h;
            used |= (1ULL << h);
            if (edges_ok(pos)) run(pos + 1);
            used &= ~(1ULL << h);
            phi[p] = -1;
        }
    }
};

// Lexicographically least embedding onto exactly the vertices of `mask`,
// comparing images in pattern-vertex order.
std::optional<Embedding> lex_least_embedding_on(const Hypergraph& pattern,
                                                const PatternPlan& plan,
                                                const HostIndex& host,
                                                uint64_t mask) {
    Embedding phi(plan.m, -1);
    uint64_t used = 0;
    auto rec = [&](auto&& self, int p) -> bool {
        if (p == plan.m) return true;
        for (Vertex h = 0; h < host.n; ++h) {
            if (!(mask & (1ULL << h)) || (used & (1ULL << h))) continue;
            phi[p] = h;
            used |= (1ULL << h);
            bool ok = true;
            for (int ei : plan.id_completed[p]) {
                uint64_t img = 0;
                for (Vertex v : pattern.edges()[ei]) img |= (1ULL << phi[v]);
                if (!host.edge_masks.count(img)) { ok = false; break; }
            }
            if (ok && self(self, p + 1)) return true;
            used &= ~(1ULL << h);
            phi[p] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return phi;
    return std::nullopt;
}

}  // namespace

void for_each_embedding(const Hypergraph& host, const Hypergraph& pattern,
                        const std::function<bool(const Embedding&)>& visit,
                        long long budget, bool image_set_reduced) {
    check_solver_input(host, pattern);
    if (pattern.n() > host.n()) return;
    Budget nodes(budget);
    HostIndex idx(host);
    PatternPlan plan = make_plan(pattern);
    EmbedSearch search(pattern, plan, idx, image_set_reduced, nodes, visit);
    search.run(0);
}

std::vector<TilingCopy> enumerate_copies(const Hypergraph& host,
                                         const Hypergraph& pattern,
                                         long long budget) {
    check_solver_input(host, pattern);
    if (binom_saturating(host.n(), pattern.n(), budget) > budget)
        fail(ErrorCode::resource,
             "binom(n, m) exceeds the search budget; raise --budget");

    std::unordered_set<uint64_t> seen;
    for_each_embedding(
        host, pattern,
        [&](const Embedding& phi) {
            seen.insert(to_mask(phi));
            return true;
        },
        budget, /*image_set_reduced=*/true);

    std::vector<uint64_t> masks(seen.begin(), seen.end());
    std::sort(masks.begin(), masks.end(), mask_lex_less);

    HostIndex idx(host);
    PatternPlan plan = make_plan(pattern);
    std::vector<TilingCopy> out;
    for (uint64_t mask : masks) {
        auto witness = lex_least_embedding_on(pattern, plan, idx, mask);
        out.push_back(TilingCopy{mask_vertices(mask), std::move(*witness)});
    }
    return out;
}

namespace {

struct CoverSearch {
    const std::vector<uint64_t>& sets;
    std::vector<std::vector<int>> by_vertex;  // candidate sets through v
    int n;
    Budget& nodes;

    CoverSearch(const std::vector<uint64_t>& s, int n_, Budget& b)
        : sets(s), by_vertex(n_), n(n_), nodes(b) {
        for (size_t i = 0; i < sets.size(); ++i)
            for (Vertex v : mask_vertices(sets[i]))
                by_vertex[v].push_back(static_cast<int>(i));
    }

    // Branching on the smallest uncovered vertex with candidates tried in
    // lex order yields the lexicographically least cover first.
    bool cover(uint64_t covered, uint64_t all, std::vector<int>& chosen) {
        nodes.spend();
        if (covered == all) return true;
        int v = std::countr_zero(~covered & all);
        for (int i : by_vertex[v]) {
            if (sets[i] & covered) continue;
            chosen.push_back(i);
            if (cover(covered | sets[i], all, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

TilingCertificate certificate_from(const std::vector<TilingCopy>& copies,
                                   const std::vector<int>& chosen) {
    TilingCertificate cert;
    for (int i : chosen) {
        cert.copies.push_back(copies[i]);
        cert.covered += static_cast<long long>(copies[i].vertices.size());
    }
    return cert;
}

}  // namespace

std::optional<TilingCertificate> has_perfect_tiling(const Hypergraph& host,
                                                    const Hypergraph& pattern,
                                                    long long budget) {
    if (pattern.n() == 0 || host.n() % pattern.n() != 0)
        fail(ErrorCode::domain, "|V(F)| must divide |V(H)|");
    auto copies = enumerate_copies(host, pattern, budget);
    std::vector<uint64_t> masks;
    for (const auto& c : copies) masks.push_back(to_mask(c.vertices));

    uint64_t all = host.n() == 64 ? ~0ULL : (1ULL << host.n()) - 1;
    Budget nodes(budget);
    CoverSearch search(masks, host.n(), nodes);
    std::vector<int> chosen;
    if (!search.cover(0, all, chosen)) return std::nullopt;
    return certificate_from(copies, chosen);
}

namespace {

struct PackSearch {
    const std::vector<uint64_t>& sets;
    int n;
    int m;  // vertices per copy
    Budget& nodes;
    std::vector<int> best;
    std::vector<int> current;

    void run(uint64_t blocked) {
        nodes.spend();
        // Pivot: smallest usable vertex; every maximal packing either
        // covers it or abandons it.
        uint64_t usable = 0;
        for (uint64_t s : sets)
            if (!(s & blocked)) usable |= s;
        if (current.size() + std::popcount(usable) / m <= best.size()) return;
        int pivot = std::countr_zero(usable);
        for (size_t i = 0; i < sets.size(); ++i) {
            if ((sets[i] & blocked) || !(sets[i] & (1ULL << pivot))) continue;
            current.push_back(static_cast<int>(i));
            if (current.size() > best.size()) best = current;
            run(blocked | sets[i]);
            current.pop_back();
        }
        run(blocked | (1ULL << pivot));  // leave the pivot uncovered
    }
};

}  // namespace

TilingCertificate max_tiling(const Hypergraph& host, const Hypergraph& pattern,
                             long long budget) {
    auto copies = enumerate_copies(host, pattern, budget);
    std::vector<uint64_t> masks;
    for (const auto& c : copies) masks.push_back(to_mask(c.vertices));
    Budget nodes(budget);
    PackSearch search{masks, host.n(), pattern.n(), nodes, {}, {}};
    search.run(0);
    std::sort(search.best.begin(), search.best.end());
    return certificate_from(copies, search.best);
}

bool is_subgraph_free(const Hypergraph& host, const Hypergraph& pattern,
                      long long budget) {
    bool found = false;
    for_each_embedding(
        host, pattern,
        [&](const Embedding&) {
            found = true;
            return false;  // stop at the first copy
        },
        budget, /*image_set_reduced=*/true);
    return !found;
}

bool verify_certificate(const Hypergraph& host, const Hypergraph& pattern,
                        const TilingCertificate& cert) {
    uint64_t covered = 0;
    long long total = 0;
    for (const auto& copy : cert.copies) {
        if (static_cast<int>(copy.vertices.size()) != pattern.n()) return false;
        uint64_t mask = 0;
        for (Vertex v : copy.vertices) {
            if (v < 0 || v >= host.n()) return false;
            mask |= (1ULL << v);
        }
        if (std::popcount(mask) != pattern.n()) return false;
        if (mask & covered) return false;
        covered |= mask;
        total += pattern.n();
        // The stored witness must be a genuine embedding onto this set.
        if (static_cast<int>(copy.embedding.size()) != pattern.n()) return false;
        uint64_t image = 0;
        for (Vertex v : copy.embedding) image |= (1ULL << v);
        if (image != mask) return false;
        for (const auto& e : pattern.edges()) {
            Edge img;
            for (Vertex v : e) img.push_back(copy.embedding[v]);
            std::sort(img.begin(), img.end());
            if (!host.has_edge(img)) return false;
        }
    }
    return total == cert.covered;
}

namespace {

// Shared machinery for the exact Turan searches: a DFS over candidate
// edges in lex order that keeps the current graph F-free. The pruned mode
// additionally propagates forced exclusions and bounds the objective.
struct ForbiddenGraphSearch {
    int n;
    int k;
    const Hypergraph& pattern;
    std::vector<uint64_t> cand;
    std::vector<std::vector<Vertex>> cand_v;
    std::unordered_set<uint64_t> chosen;
    Budget& nodes;

    ForbiddenGraphSearch(int n_, const Hypergraph& pat, Budget& b)
        : n(n_), k(pat.k()), pattern(pat), nodes(b) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            uint64_t m = 0;
            for (int i : idx) m |= (1ULL << i);
            cand.push_back(m);
            cand_v.emplace_back(idx.begin(), idx.end());
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    // Does chosen + `extra` span a copy of the pattern using `extra`?
    bool creates_copy(const std::vector<Vertex>& extra) {
        for (const auto& pe : pattern.edges()) {
            std::vector<Vertex> image = extra;
            std::sort(image.begin(), image.end());
            do {
                nodes.spend();
                Embedding phi(pattern.n(), -1);
                uint64_t used = 0;
                bool consistent = true;
                for (int i = 0; i < k && consistent; ++i) {
                    Vertex pv = pe[i], hv = image[i];
                    if (used & (1ULL << hv)) { consistent = false; break; }
                    phi[pv] = hv;
                    used |= (1ULL << hv);
                }
                if (consistent && extend(phi, used, 0, to_mask(extra)))
                    return true;
            } while (std::next_permutation(image.begin(), image.end()));
        }
        return false;
    }

    bool has(uint64_t mask, uint64_t extra) const {
        return mask == extra || chosen.count(mask);
    }

    bool extend(Embedding& phi, uint64_t used, Vertex p, uint64_t extra) {
        while (p < pattern.n() && phi[p] >= 0) ++p;
        if (p == pattern.n()) return true;
        for (Vertex h = 0; h < n; ++h) {
            if (used & (1ULL << h)) continue;
            nodes.spend();
            phi[p] = h;
            used |= (1ULL << h);
            bool ok = true;
            for (const auto& e : pattern.edges()) {
                bool complete = true;
                bool through = false;
                uint64_t img = 0;
                for (Vertex v : e) {
                    if (phi[v] < 0) { complete = false; break; }
                    if (v == p) through = true;
                    img |= (1ULL << phi[v]);
                }
                if (complete && through && !has(img, extra)) { ok = false; break; }
            }
            if (ok && extend(phi, used, p + 1, extra)) return true;
            used &= ~(1ULL << h);
            phi[p] = -1;
        }
        return false;
    }
};

enum class EdgeState : int8_t { undecided, in, out };

struct TuranSearch : ForbiddenGraphSearch {
    bool prune;
    std::vector<EdgeState> state;
    long long count = 0;
    long long undecided;
    long long best = 0;

    TuranSearch(int n_, const Hypergraph& pat, Budget& b, bool prune_)
        : ForbiddenGraphSearch(n_, pat, b), prune(prune_),
          state(cand.size(), EdgeState::undecided),
          undecided(static_cast<long long>(cand.size())) {}

    void dfs(size_t idx) {
        nodes.spend();
        if (prune && count + undecided <= best) return;
        while (idx < cand.size() && state[idx] != EdgeState::undecided) ++idx;
        if (idx == cand.size()) {
            best = std::max(best, count);
            return;
        }

        if (!creates_copy(cand_v[idx])) {
            state[idx] = EdgeState::in;
            chosen.insert(cand[idx]);
            --undecided;
            ++count;
            std::vector<size_t> forced;
            if (prune) {
                for (size_t j = idx + 1; j < cand.size(); ++j) {
                    if (state[j] != EdgeState::undecided) continue;
                    if (creates_copy(cand_v[j])) {
                        state[j] = EdgeState::out;
                        --undecided;
                        forced.push_back(j);
                    }
                }
            }
            dfs(idx + 1);
            for (size_t j : forced) {
                state[j] = EdgeState::undecided;
                ++undecided;
            }
            --count;
            ++undecided;
            chosen.erase(cand[idx]);
            state[idx] = EdgeState::undecided;
        }

        state[idx] = EdgeState::out;
        --undecided;
        dfs(idx + 1);
        ++undecided;
        state[idx] = EdgeState::undecided;
    }
};

}  // namespace

long long turan_brute(int n, const Hypergraph& pattern, long long budget,
                      bool prune) {
    if (n < 0 || n > 20)
        fail(ErrorCode::resource, "exact Turan search supports n <= 20");
    if (pattern.edge_count() == 0)
        fail(ErrorCode::domain, "pattern must have at least one edge");
    if (n < pattern.k()) return 0;
    Budget nodes(budget);
    TuranSearch search(n, pattern, nodes, prune);
    search.dfs(0);
    return search.best;
}

namespace {

struct CoexSearch : ForbiddenGraphSearch {
    bool prune;
    std::vector<EdgeState> state;
    std::vector<uint64_t> dsets;  // all (k-1)-subsets of [n]
    std::unordered_map<uint64_t, int> dset_index;
    std::vector<long long> deg, pot;
    long long best = -1;
    std::vector<uint64_t> best_edges;

    CoexSearch(int n_, const Hypergraph& pat, Budget& b, bool prune_)
        : ForbiddenGraphSearch(n_, pat, b), prune(prune_),
          state(cand.size(), EdgeState::undecided) {
        std::vector<int> idx(k - 1);
        std::iota(idx.begin(), idx.end(), 0);
        if (k - 1 <= n) {
            while (true) {
                uint64_t m = 0;
                for (int i : idx) m |= (1ULL << i);
                dset_index[m] = static_cast<int>(dsets.size());
                dsets.push_back(m);
                int i = k - 2;
                while (i >= 0 && idx[i] == n - (k - 1) + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < k - 1; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        deg.assign(dsets.size(), 0);
        pot.assign(dsets.size(), 0);
        for (uint64_t e : cand)
            for_subsets(e, [&](int s) { ++pot[s]; });
    }

    template <typename Fn>
    void for_subsets(uint64_t edge, Fn fn) {
        uint64_t rest = edge;
        while (rest) {
            uint64_t bit = rest & -rest;
            fn(dset_index.at(edge & ~bit));
            rest &= rest - 1;
        }
    }

    long long upper_bound() const {
        long long ub = INT64_MAX;
        for (size_t i = 0; i < dsets.size(); ++i)
            ub = std::min(ub, deg[i] + pot[i]);
        return ub;
    }

    long long current_min() const {
        long long v = INT64_MAX;
        for (long long d : deg) v = std::min(v, d);
        return v == INT64_MAX ? 0 : v;
    }

    void dfs(size_t idx) {
        nodes.spend();
        if (prune && upper_bound() <= best) return;
        while (idx < cand.size() && state[idx] != EdgeState::undecided) ++idx;
        if (idx == cand.size()) {
            long long v = current_min();
            if (v > best) {
                best = v;
                best_edges.assign(chosen.begin(), chosen.end());
            }
            return;
        }

        if (!creates_copy(cand_v[idx])) {
            state[idx] = EdgeState::in;
            chosen.insert(cand[idx]);
            for_subsets(cand[idx], [&](int s) { ++deg[s]; --pot[s]; });
            std::vector<size_t> forced;
            if (prune) {
                for (size_t j = idx + 1; j < cand.size(); ++j) {
                    if (state[j] != EdgeState::undecided) continue;
                    if (creates_copy(cand_v[j])) {
                        state[j] = EdgeState::out;
                        for_subsets(cand[j], [&](int s) { --pot[s]; });
                        forced.push_back(j);
                    }
                }
            }
            dfs(idx + 1);
            for (size_t j : forced) {
                state[j] = EdgeState::undecided;
                for_subsets(cand[j], [&](int s) { ++pot[s]; });
            }
            for_subsets(cand[idx], [&](int s) { --deg[s]; ++pot[s]; });
            chosen.erase(cand[idx]);
            state[idx] = EdgeState::undecided;
        }

        state[idx] = EdgeState::out;
        for_subsets(cand[idx], [&](int s) { --pot[s]; });
        dfs(idx + 1);
        for_subsets(cand[idx], [&](int s) { ++pot[s]; });
        state[idx] = EdgeState::undecided;
    }
};

}  // namespace

CoexResult coex_brute(int n, const Hypergraph& pattern, long long budget,
                      bool prune) {
    if (n < 0 || n > 20)
        fail(ErrorCode::resource, "exact codegree Turan search supports n <= 20");
    if (pattern.edge_count() == 0)
        fail(ErrorCode::domain, "pattern must have at least one edge");
    if (n < pattern.k()) return CoexResult{0, Hypergraph(pattern.k(), n)};
    Budget nodes(budget);
    CoexSearch search(n, pattern, nodes, prune);
    search.dfs(0);
    Hypergraph witness(pattern.k(), n);
    for (uint64_t mask : search.best_edges) witness.add_edge(mask_vertices(mask));
    return CoexResult{search.best, std::move(witness)};
}

bool is_steiner_system(const Hypergraph& h, int t) {
    if (t < 1 || t >= h.k())
        fail(ErrorCode::domain, "t must satisfy 1 <= t < k");
    if (h.n() > kMaxSolverVertices)
        fail(ErrorCode::resource, "Steiner check supports at most 64 vertices");
    if (h.n() < t) return true;
    std::unordered_map<uint64_t, long long> count;
    std::vector<int> idx(t);
    for (const auto& e : h.edges()) {
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            uint64_t m = 0;
            for (int i : idx) m |= (1ULL << e[i]);
            ++count[m];
            int i = t - 1;
            while (i >= 0 && idx[i] == h.k() - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    long long total = binom_saturating(h.n(), t, INT64_MAX - 1);
    if (static_cast<long long>(count.size()) != total) return false;
    for (const auto& [mask, c] : count)
        if (c != 1) return false;
    return true;
}

Rat extremal_deficit(const Hypergraph& h, const Rat& sigma,
                     const std::optional<std::vector<Vertex>>& b,
                     long long budget) {
    if (h.n() > kMaxSolverVertices)
        fail(ErrorCode::resource, "deficit computation supports at most 64 vertices");
    Rat size_rat = (Rat(1) - sigma) * Rat(h.n());
    if (size_rat < Rat(0))
        fail(ErrorCode::domain, "sigma must be at most 1");
    long long target = size_rat.num() / size_rat.den();

    std::vector<uint64_t> edge_masks;
    for (const auto& e : h.edges()) edge_masks.push_back(to_mask(e));

    auto density = [&](uint64_t mask) {
        long long inside = 0;
        for (uint64_t em : edge_masks)
            if ((em & ~mask) == 0) ++inside;
        long long denom = binom_saturating(std::popcount(mask), h.k(),
                                           INT64_MAX - 1);
        if (denom == 0) return Rat(0);
        return Rat(inside, denom);
    };

    if (b.has_value()) {
        uint64_t mask = 0;
        for (Vertex v : *b) {
            if (v < 0 || v >= h.n())
                fail(ErrorCode::domain, "set vertex out of range");
            mask |= (1ULL << v);
        }
        if (std::popcount(mask) != static_cast<int>(b->size()))
            fail(ErrorCode::domain, "set has repeated vertices");
        if (static_cast<long long>(b->size()) != target)
            fail(ErrorCode::domain,
                 "set must have exactly floor((1-sigma)n) = " +
                     std::to_string(target) + " vertices");
        return density(mask);
    }

    if (binom_saturating(h.n(), target, budget) > budget)
        fail(ErrorCode::resource,
             "binom(n, |B|) exceeds the search budget; raise --budget");
    if (target == 0) return Rat(0);
    Budget nodes(budget);
    std::optional<Rat> best;
    std::vector<int> idx(target);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        nodes.spend();
        uint64_t mask = 0;
        for (int i : idx) mask |= (1ULL << i);
        Rat d = density(mask);
        if (!best || d < *best) best = d;
        int i = static_cast<int>(target) - 1;
        while (i >= 0 && idx[i] == h.n() - target + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < target; ++j) idx[j] = idx[j - 1] + 1;
    }
    return *best;
}

}  // namespace tilelab
