#include "tilelab/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tilelab/partite.hpp"

namespace tilelab {

namespace {

// All k-sets of [n] that intersect the first `a` vertices, added to `h`.
void add_sets_meeting_prefix(Hypergraph& h, int n, int a) {
    int k = h.k();
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (n < k) return;
    while (true) {
        if (idx[0] < a) {
            Edge e(idx.begin(), idx.end());
            h.add_edge(std::move(e));
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Vertex> range_vertices(int from, int to) {
    std::vector<Vertex> v(to - from);
    std::iota(v.begin(), v.end(), from);
    return v;
}

}  // namespace

std::pair<Hypergraph, ConstructionCertificate> space_barrier(
    const Hypergraph& pattern, int n, long long budget) {
    int m = pattern.n();
    if (m == 0 || n <= 0 || n % m != 0)
        fail(ErrorCode::domain, "|V(F)| must divide n");
    int tau = vertex_cover_number(pattern, budget);
    if (tau < 1)
        fail(ErrorCode::domain, "pattern needs an edge (tau >= 1)");
    long long a = static_cast<long long>(tau) * n / m - 1;
    if (static_cast<long long>(tau) * n % m != 0)
        fail(ErrorCode::domain, "tau(F)*n/m must be an integer");

    Hypergraph h(pattern.k(), n);
    add_sets_meeting_prefix(h, n, static_cast<int>(a));

    ConstructionCertificate cert;
    cert.set_a = range_vertices(0, static_cast<int>(a));
    cert.set_b = range_vertices(static_cast<int>(a), n);
    cert.claimed_min_codegree = a;
    cert.notes = "space-barrier tau=" + std::to_string(tau) +
                 " m=" + std::to_string(m) + "; no perfect tiling of the pattern";
    return {std::move(h), std::move(cert)};
}

std::pair<Hypergraph, ConstructionCertificate> strengthened_barrier(
    const PartiteProfile& profile, int n, const Hypergraph& inner) {
    int m = profile.m();
    int k = profile.k();
    if (n <= 0 || n % m != 0)
        fail(ErrorCode::domain, "m must divide n");
    if (inner.k() != k)
        fail(ErrorCode::domain, "inner graph must have the same uniformity");
    long long a = static_cast<long long>(profile.sizes[0]) * n / m - 1;
    if (a < 1)
        fail(ErrorCode::domain, "n too small: the A side would be empty");
    if (inner.n() != n - a)
        fail(ErrorCode::domain,
             "inner graph must have n - |A| = " + std::to_string(n - a) +
                 " vertices");

    Hypergraph h(k, n);
    for (const auto& e : inner.edges()) {
        Edge shifted;
        for (Vertex v : e) shifted.push_back(v + static_cast<int>(a));
        h.add_edge(std::move(shifted));
    }
    add_sets_meeting_prefix(h, n, static_cast<int>(a));

    ConstructionCertificate cert;
    cert.set_a = range_vertices(0, static_cast<int>(a));
    cert.set_b = range_vertices(static_cast<int>(a), n);
    cert.claimed_min_codegree = a + min_d_degree(inner, k - 1);

    // The inner graph must avoid every profile (b1,...,bk) with
    // sum = m - a1 + 1 and bi <= ai; enumerated in lex order.
    int target = m - profile.sizes[0] + 1;
    std::vector<int> b(k, 0);
    auto rec = [&](auto&& self, int pos, int sum, int prev) -> void {
        if (pos == k) {
            if (sum == target) cert.freeness_claims.push_back(b);
            return;
        }
        for (int v = std::max(prev, 1); v <= profile.sizes[pos]; ++v) {
            if (sum + v > target) break;
            b[pos] = v;
            self(self, pos + 1, sum + v, v);
        }
    };
    rec(rec, 0, 0, 1);
    cert.notes = "strengthened space-barrier";
    return {std::move(h), std::move(cert)};
}

namespace {

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

long long pow_mod(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

}  // namespace

std::vector<std::vector<std::pair<long long, long long>>> mubayi_classes(
    int t, long long q) {
    if (t < 2) fail(ErrorCode::domain, "t must be at least 2");
    if (!is_prime(q))
        fail(ErrorCode::domain, std::to_string(q) + " is not prime");
    if ((q - 1) % (t - 1) != 0)
        fail(ErrorCode::domain,
             "q = 1 (mod t-1) is required for the order-(t-1) subgroup");

    // The multiplicative group is cyclic, so the solutions of x^(t-1) = 1
    // are exactly the subgroup of order t-1.
    std::vector<long long> subgroup;
    for (long long x = 1; x < q; ++x)
        if (pow_mod(x, t - 1, q) == 1) subgroup.push_back(x);
    if (static_cast<int>(subgroup.size()) != t - 1)
        fail(ErrorCode::domain, "no subgroup of order t-1");

    // Orbits of coordinatewise scaling, canonicalized by their smallest
    // member; vertex numbering follows the lex order of those members.
    std::vector<std::vector<std::pair<long long, long long>>> classes;
    std::vector<std::vector<bool>> seen(q, std::vector<bool>(q, false));
    for (long long x = 1; x < q; ++x)
        for (long long y = 1; y < q; ++y) {
            if (seen[x][y]) continue;
            std::vector<std::pair<long long, long long>> orbit;
            for (long long s : subgroup) {
                long long ox = s * x % q, oy = s * y % q;
                seen[ox][oy] = true;
                orbit.emplace_back(ox, oy);
            }
            std::sort(orbit.begin(), orbit.end());
            classes.push_back(std::move(orbit));
        }
    std::sort(classes.begin(), classes.end());
    return classes;
}

std::pair<Hypergraph, ConstructionCertificate> mubayi_graph(int k, int t,
                                                            long long q) {
    if (k < 3) fail(ErrorCode::domain, "k must be at least 3");
    auto classes = mubayi_classes(t, q);
    int n = static_cast<int>(classes.size());

    std::vector<long long> in_subgroup(q, 0);
    for (long long x = 1; x < q; ++x)
        if (pow_mod(x, t - 1, q) == 1) in_subgroup[x] = 1;

    Hypergraph h(k, n);
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (n >= k) {
        while (true) {
            long long pa = 1, pb = 1;
            for (int i : idx) {
                pa = pa * classes[i].front().first % q;
                pb = pb * classes[i].front().second % q;
            }
            if (in_subgroup[(pa + pb) % q]) {
                Edge e(idx.begin(), idx.end());
                h.add_edge(std::move(e));
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    ConstructionCertificate cert;
    cert.set_b = range_vertices(0, n);
    cert.claimed_min_codegree = q - k;
    std::vector<int> forbidden(k, 1);
    forbidden[k - 2] = 2;
    forbidden[k - 1] = t;
    std::sort(forbidden.begin(), forbidden.end());
    cert.freeness_claims.push_back(std::move(forbidden));
    cert.notes = "finite-field construction q=" + std::to_string(q) +
                 " t=" + std::to_string(t);
    return {std::move(h), std::move(cert)};
}

Hypergraph parity_construction(const Hypergraph& g,
                               const std::vector<Vertex>& set_a) {
    std::vector<bool> in_a(g.n(), false);
    for (Vertex v : set_a) {
        if (v < 0 || v >= g.n())
            fail(ErrorCode::domain, "A must be a subset of V(G)");
        in_a[v] = true;
    }
    Hypergraph h(g.k(), g.n(), g.edges());
    int k = g.k(), n = g.n();
    if (n < k) return h;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        int inside = 0;
        for (int i : idx) inside += in_a[i] ? 1 : 0;
        if (inside % 2 == 0) {
            Edge e(idx.begin(), idx.end());
            h.add_edge(std::move(e));
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return h;
}

}  // namespace tilelab
