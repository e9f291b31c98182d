#include "tilelab/fractional.hpp"

#include <algorithm>
#include <numeric>

namespace tilelab {

namespace {

void check_flat_shape(const PartiteProfile& profile) {
    for (int i = 2; i < profile.k(); ++i)
        if (profile.sizes[i] != profile.sizes[1])
            fail(ErrorCode::shape, "profile must have shape (a, b,...,b)");
    if (profile.sizes[0] >= profile.sizes[1])
        fail(ErrorCode::shape, "profile must have a < b");
}

long long ipow(long long base, int e) {
    long long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

Rat weight_at(const FractionalTiling& h, Vertex v, int e) {
    auto it = h.weights.find({v, e});
    return it == h.weights.end() ? Rat(0) : it->second;
}

bool chain_ok(const std::vector<Rat>& w, const std::vector<int>& divisors) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (!(w[i] <= w[i + 1])) return false;
        if (!(w[i] * Rat(divisors[i + 1]) >= w[i + 1] * Rat(divisors[i])))
            return false;
    }
    return true;
}

}  // namespace

FractionalReport validate(const Hypergraph& l, const PartiteProfile& profile,
                          const FractionalTiling& h) {
    if (profile.k() != l.k())
        fail(ErrorCode::domain, "profile and host have different uniformity");
    for (const auto& [key, w] : h.weights) {
        auto [v, e] = key;
        if (e < 0 || e >= static_cast<int>(l.edges().size()))
            fail(ErrorCode::structural,
                 "weight on nonexistent edge " + std::to_string(e));
        const Edge& edge = l.edges()[e];
        if (!std::binary_search(edge.begin(), edge.end(), v))
            fail(ErrorCode::structural,
                 "weight on non-incident pair (vertex " + std::to_string(v) +
                     ", edge " + std::to_string(e) + ")");
    }

    FractionalReport report;
    report.weight = Rat(0);
    for (const auto& [key, w] : h.weights) {
        if (w < Rat(0)) {
            report.reason = "negative weight";
            return report;
        }
        report.weight += w;
        if (!w.is_zero() && (!report.h_min || w < *report.h_min))
            report.h_min = w;
    }

    // Condition 2: per-vertex totals stay within capacity 1.
    std::vector<Rat> vertex_total(l.n(), Rat(0));
    for (const auto& [key, w] : h.weights) vertex_total[key.first] += w;
    for (Vertex v = 0; v < l.n(); ++v)
        if (vertex_total[v] > Rat(1)) {
            report.reason = "vertex " + std::to_string(v) + " exceeds weight 1";
            return report;
        }

    // Condition 3 per weighted edge: stored labeling first, then the
    // weight-sorted one, then all k! labelings. The fallbacks are only a
    // safety net; a feasible edge always passes the sorted labeling.
    for (int e = 0; e < static_cast<int>(l.edges().size()); ++e) {
        const Edge& edge = l.edges()[e];
        std::vector<Rat> w;
        bool any_nonzero = false;
        for (Vertex v : edge) {
            w.push_back(weight_at(h, v, e));
            any_nonzero = any_nonzero || !w.back().is_zero();
        }
        if (!any_nonzero) continue;

        auto try_labeling = [&](const std::vector<Vertex>& lab) {
            if (lab.size() != edge.size()) return false;
            std::vector<Rat> ordered;
            for (Vertex v : lab) {
                if (!std::binary_search(edge.begin(), edge.end(), v)) return false;
                ordered.push_back(weight_at(h, v, e));
            }
            return chain_ok(ordered, profile.sizes);
        };

        bool ok = false;
        auto stored = h.labelings.find(e);
        if (stored != h.labelings.end()) ok = try_labeling(stored->second);
        if (!ok) {
            std::vector<Vertex> sorted(edge.begin(), edge.end());
            std::stable_sort(sorted.begin(), sorted.end(),
                             [&](Vertex x, Vertex y) {
                                 return weight_at(h, x, e) < weight_at(h, y, e);
                             });
            ok = try_labeling(sorted);
        }
        if (!ok) {
            std::vector<Vertex> perm(edge.begin(), edge.end());
            std::sort(perm.begin(), perm.end());
            do {
                if (try_labeling(perm)) { ok = true; break; }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        if (!ok) {
            report.reason = "edge " + std::to_string(e) +
                            " admits no labeling satisfying the chains";
            return report;
        }
    }

    report.valid = true;
    return report;
}

FractionalTiling standard_weights(const PartiteProfile& profile) {
    check_flat_shape(profile);
    int k = profile.k();
    long long a = profile.sizes[0], b = profile.sizes[1];
    Rat small_weight(1, ipow(b, k - 1));
    Rat large_weight(1, a * ipow(b, k - 2));

    Hypergraph l = complete_partite(profile);
    FractionalTiling h;
    for (int e = 0; e < static_cast<int>(l.edges().size()); ++e) {
        const Edge& edge = l.edges()[e];
        std::vector<Vertex> labeling;
        for (Vertex v : edge)
            if (v < a) {
                h.weights[{v, e}] = small_weight;
                labeling.push_back(v);
            }
        for (Vertex v : edge)
            if (v >= a) {
                h.weights[{v, e}] = large_weight;
                labeling.push_back(v);
            }
        h.labelings[e] = std::move(labeling);
    }
    return h;
}

FractionalTiling extended_weights(const PartiteProfile& profile) {
    check_flat_shape(profile);
    int k = profile.k();
    if (k < 3) fail(ErrorCode::shape, "extension weights need k >= 3");
    long long a = profile.sizes[0], b = profile.sizes[1];
    int m = profile.m();
    Vertex anchor = profile.sizes[0];  // first vertex of the second part

    Hypergraph l = khat_extension(profile);
    FractionalTiling h = standard_weights(profile);

    // Edge indices differ between the base graph and the extension, so map
    // each original edge to its position in the extension's edge order.
    FractionalTiling out;
    int extra_edge = -1;
    std::vector<int> base_index_of(l.edges().size(), -1);
    {
        Hypergraph base = complete_partite(profile);
        for (int e = 0; e < static_cast<int>(l.edges().size()); ++e) {
            const Edge& edge = l.edges()[e];
            if (edge.back() >= m) {
                extra_edge = e;
                continue;
            }
            auto it = std::lower_bound(base.edges().begin(), base.edges().end(),
                                       edge);
            base_index_of[e] = static_cast<int>(it - base.edges().begin());
        }
    }

    // Drop the lexicographically least original edge through the anchor.
    int dropped = -1;
    for (int e = 0; e < static_cast<int>(l.edges().size()); ++e) {
        if (e == extra_edge) continue;
        const Edge& edge = l.edges()[e];
        if (std::binary_search(edge.begin(), edge.end(), anchor)) {
            dropped = e;
            break;
        }
    }

    for (int e = 0; e < static_cast<int>(l.edges().size()); ++e) {
        if (e == extra_edge || e == dropped) continue;
        int be = base_index_of[e];
        const Edge& edge = l.edges()[e];
        for (Vertex v : edge) out.weights[{v, e}] = h.weights.at({v, be});
        out.labelings[e] = h.labelings.at(be);
    }

    std::vector<Vertex> labeling{anchor};
    out.weights[{anchor, extra_edge}] = Rat(1, a * ipow(b, k - 2));
    for (int i = 0; i < k - 1; ++i) {
        out.weights[{m + i, extra_edge}] = Rat(1, a * a * ipow(b, k - 3));
        labeling.push_back(m + i);
    }
    out.labelings[extra_edge] = std::move(labeling);
    return out;
}

namespace {

// Dense tableau simplex, exact rationals, Bland's rule. Maximizes c.x
// subject to Ax <= rhs, x >= 0, with rhs >= 0 so the zero point is a
// feasible start.
struct Simplex {
    int rows, cols;  // structural columns only
    std::vector<std::vector<Rat>> t;  // rows x (cols + rows + 1)
    std::vector<Rat> obj;
    Rat value;
    std::vector<int> basis;
    Budget& nodes;

    Simplex(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& rhs,
            const std::vector<Rat>& c, Budget& nodes_)
        : rows(static_cast<int>(a.size())), cols(static_cast<int>(c.size())),
          value(0), nodes(nodes_) {
        t.assign(rows, std::vector<Rat>(cols + rows + 1, Rat(0)));
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) t[i][j] = a[i][j];
            t[i][cols + i] = Rat(1);
            t[i][cols + rows] = rhs[i];
        }
        obj.assign(cols + rows + 1, Rat(0));
        for (int j = 0; j < cols; ++j) obj[j] = c[j];
        basis.resize(rows);
        std::iota(basis.begin(), basis.end(), cols);
    }

    void run() {
        while (true) {
            int enter = -1;
            for (int j = 0; j < cols + rows; ++j)
                if (obj[j] > Rat(0)) { enter = j; break; }
            if (enter < 0) return;
            int leave = -1;
            Rat best_ratio(0);
            for (int i = 0; i < rows; ++i) {
                if (!(t[i][enter] > Rat(0))) continue;
                Rat ratio = t[i][cols + rows] / t[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0)
                fail(ErrorCode::domain, "unbounded fractional program");
            pivot(leave, enter);
        }
    }

    void pivot(int r, int s) {
        nodes.spend();
        Rat inv = Rat(1) / t[r][s];
        for (auto& x : t[r]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || t[i][s].is_zero()) continue;
            Rat f = t[i][s];
            for (int j = 0; j <= cols + rows; ++j) t[i][j] -= f * t[r][j];
        }
        if (!obj[s].is_zero()) {
            Rat f = obj[s];
            for (int j = 0; j < cols + rows; ++j) obj[j] -= f * t[r][j];
            value += f * t[r][cols + rows];
        }
        basis[r] = s;
    }

    std::vector<Rat> solution() const {
        std::vector<Rat> x(cols, Rat(0));
        for (int i = 0; i < rows; ++i)
            if (basis[i] < cols) x[basis[i]] = t[i][cols + rows];
        return x;
    }
};

}  // namespace

std::pair<FractionalTiling, Rat> maximize_small(const Hypergraph& l,
                                                const PartiteProfile& profile,
                                                long long budget) {
    if (profile.k() != l.k())
        fail(ErrorCode::domain, "profile and host have different uniformity");
    int k = l.k();
    int ecount = static_cast<int>(l.edges().size());
    if (ecount > 12 || k > 5)
        fail(ErrorCode::resource,
             "maximizer supports at most 12 edges and k <= 5");
    Budget nodes(budget);

    // Variables: one per incidence.
    std::vector<std::pair<Vertex, int>> vars;
    std::vector<std::vector<int>> var_of_edge(ecount);
    for (int e = 0; e < ecount; ++e)
        for (Vertex v : l.edges()[e]) {
            var_of_edge[e].push_back(static_cast<int>(vars.size()));
            vars.emplace_back(v, e);
        }

    // Per-edge orderings; slot i gets divisor profile.sizes[i]. Slots with
    // equal divisors force equal weights through the two chains, so only
    // ascending vertex order within such runs is kept.
    std::vector<std::vector<std::vector<int>>> orderings(ecount);
    for (int e = 0; e < ecount; ++e) {
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool canonical = true;
            for (int i = 0; i + 1 < k && canonical; ++i)
                if (profile.sizes[i] == profile.sizes[i + 1] &&
                    perm[i] > perm[i + 1])
                    canonical = false;
            if (canonical) orderings[e].push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::optional<Rat> best;
    FractionalTiling best_tiling;
    std::vector<int> choice(ecount, 0);
    while (true) {
        nodes.spend();
        // Rows: vertex capacities, then per-edge chains.
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> rhs;
        for (Vertex v = 0; v < l.n(); ++v) {
            std::vector<Rat> row(vars.size(), Rat(0));
            for (size_t j = 0; j < vars.size(); ++j)
                if (vars[j].first == v) row[j] = Rat(1);
            a.push_back(std::move(row));
            rhs.push_back(Rat(1));
        }
        for (int e = 0; e < ecount; ++e) {
            const auto& perm = orderings[e][choice[e]];
            for (int i = 0; i + 1 < k; ++i) {
                int lo = var_of_edge[e][perm[i]];
                int hi = var_of_edge[e][perm[i + 1]];
                std::vector<Rat> row(vars.size(), Rat(0));
                row[lo] = Rat(1);
                row[hi] = Rat(-1);  // x_lo <= x_hi
                a.push_back(std::move(row));
                rhs.push_back(Rat(0));
                std::vector<Rat> ratio(vars.size(), Rat(0));
                // x_hi / a_{i+1} <= x_lo / a_i
                ratio[hi] = Rat(profile.sizes[i]);
                ratio[lo] = Rat(-profile.sizes[i + 1]);
                a.push_back(std::move(ratio));
                rhs.push_back(Rat(0));
            }
        }
        std::vector<Rat> c(vars.size(), Rat(1));
        Simplex lp(a, rhs, c, nodes);
        lp.run();

        if (!best || lp.value > *best) {
            best = lp.value;
            best_tiling = FractionalTiling{};
            auto x = lp.solution();
            std::vector<bool> weighted(ecount, false);
            for (size_t j = 0; j < vars.size(); ++j)
                if (!x[j].is_zero()) {
                    best_tiling.weights[vars[j]] = x[j];
                    weighted[vars[j].second] = true;
                }
            for (int e = 0; e < ecount; ++e) {
                if (!weighted[e]) continue;
                std::vector<Vertex> lab;
                for (int pos : orderings[e][choice[e]])
                    lab.push_back(l.edges()[e][pos]);
                best_tiling.labelings[e] = std::move(lab);
            }
        }

        int e = ecount - 1;
        while (e >= 0 && ++choice[e] == static_cast<int>(orderings[e].size()))
            choice[e--] = 0;
        if (e < 0) break;
    }
    if (!best) {
        // Host without edges: the all-zero assignment is the optimum.
        return {FractionalTiling{}, Rat(0)};
    }
    return {std::move(best_tiling), *best};
}

}  // namespace tilelab
