#include "tilelab/thresholds.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace tilelab {

long long frobenius(const std::vector<long long>& b) {
    std::vector<long long> pos;
    for (long long x : b) {
        if (x < 0) fail(ErrorCode::domain, "entries must be nonnegative");
        if (x > 0) pos.push_back(x);
    }
    if (pos.empty()) fail(ErrorCode::domain, "all entries are zero");
    long long g = 0;
    for (long long x : pos) g = std::gcd(g, x);
    if (g != 1)
        fail(ErrorCode::undefined_frobenius,
             "positive entries have gcd " + std::to_string(g) +
                 "; the Frobenius number is undefined");
    std::sort(pos.begin(), pos.end());
    if (pos.front() == 1) return -1;

    // Shortest path over residues mod the smallest entry: dist[r] is the
    // least representable value congruent to r. The largest gap is then
    // max(dist) - a.
    long long a = pos.front();
    std::vector<long long> dist(a, -1);
    dist[0] = 0;
    using Item = std::pair<long long, long long>;  // (value, residue)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0, 0});
    while (!heap.empty()) {
        auto [d, r] = heap.top();
        heap.pop();
        if (dist[r] != d) continue;
        for (long long step : pos) {
            long long nr = (r + step) % a;
            long long nd = d + step;
            if (dist[nr] == -1 || nd < dist[nr]) {
                dist[nr] = nd;
                heap.push({nd, nr});
            }
        }
    }
    long long worst = 0;
    for (long long d : dist) worst = std::max(worst, d);
    return worst - a;
}

long long profile_constant(const PartiteProfile& profile) {
    std::vector<long long> diffs;
    long long g = 0;
    for (size_t i = 1; i < profile.sizes.size(); ++i) {
        long long d = profile.sizes[i] - profile.sizes[0];
        diffs.push_back(d);
        g = std::gcd(g, d);
    }
    if (g != 1)
        fail(ErrorCode::domain,
             "part-size differences have gcd " + std::to_string(g) +
                 "; the constant is defined only for coprime differences");
    return frobenius(diffs) + 1;
}

namespace {

long long smallest_prime_factor(long long d) {
    for (long long p = 2; p * p <= d; ++p)
        if (d % p == 0) return p;
    return d;
}

}  // namespace

ThresholdReport mycroft_threshold(const Hypergraph& f, long long n,
                                  long long budget) {
    if (n <= 0 || n % f.n() != 0)
        fail(ErrorCode::domain, "n must be a positive multiple of |V(F)|");
    InvariantReport inv = structural_invariants(f, budget);

    ThresholdReport report;
    report.s_set = inv.s_set;
    report.gcd_f = inv.gcd_f;
    report.sigma = inv.sigma;
    long long gs = 0;
    for (int s : inv.s_set) gs = std::gcd(gs, static_cast<long long>(s));
    report.gcd_s = gs;

    bool s_is_one = inv.s_set.size() == 1 && *inv.s_set.begin() == 1;
    if (s_is_one || gs > 1) {
        report.case_tag = ThresholdCase::half_n;
        report.value = Rat(n, 2);
    } else if (inv.gcd_f.has_value() && *inv.gcd_f == 1) {
        report.case_tag = ThresholdCase::sigma_n;
        report.value = inv.sigma * Rat(n);
    } else {
        // gcd(S) = 1 and either gcd(F) = d > 1 or every realization is
        // balanced; the latter forces |S| = 1 and was handled above.
        long long d = inv.gcd_f.value();
        long long p = smallest_prime_factor(d);
        report.case_tag = ThresholdCase::max_sigma_p;
        report.smallest_prime = p;
        report.value = std::max(inv.sigma * Rat(n), Rat(n, p));
    }
    return report;
}

namespace {

Rat binomial_rat(long long n, int r) {
    if (n < r) return Rat(0);
    Rat v(1);
    for (int i = 0; i < r; ++i) v *= Rat(n - i, i + 1);
    return v;
}

}  // namespace

Rat degree_bound(const PartiteProfile& profile, long long n,
                 const TuranFn& turan_fn) {
    long long m = profile.m();
    long long a1 = profile.sizes[0];
    if (n <= 0 || n % m != 0)
        fail(ErrorCode::domain, "n must be a positive multiple of m");
    long long c = profile_constant(profile);

    int k = profile.k();
    long long base = (m - a1) * n / m;
    Rat f(0);
    for (long long i = 1 - c; i <= 1; ++i) {
        long long np = base + i;
        if (np < k) continue;
        Rat denom = binomial_rat(np, k - 1);
        if (denom.is_zero()) continue;
        f = std::max(f, Rat(turan_fn(np)) * Rat(k) / denom);
    }
    return Rat(a1 * n, m) + f + Rat(c);
}

bool steiner_divisibility(int k, long long n_prime) {
    if (k < 2) fail(ErrorCode::domain, "k must be at least 2");
    if (n_prime < k) fail(ErrorCode::domain, "n' must be at least k");
    for (int i = 0; i <= k - 2; ++i) {
        long long a = n_prime - i;
        int b = k - 1 - i;
        long long mod = k - i;
        // p-adic valuation of binom(a, b) via carries when adding b and
        // a-b in base p; avoids computing the binomial itself.
        auto valuation = [&](long long p) {
            long long x = b, y = a - b, carries = 0, carry = 0;
            while (x > 0 || y > 0 || carry > 0) {
                long long s = x % p + y % p + carry;
                carry = s >= p ? 1 : 0;
                carries += carry;
                x /= p;
                y /= p;
            }
            return carries;
        };
        long long rest = mod;
        for (long long p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            long long need = 0;
            while (rest % p == 0) { rest /= p; ++need; }
            if (valuation(p) < need) return false;
        }
        if (rest > 1 && valuation(rest) < 1) return false;
    }
    return true;
}

bool k112_divisibility(int k, long long n) {
    return steiner_divisibility(k, k * n / (k + 1) + 1);
}

long long k112_threshold(int k, long long n) {
    if (k < 3) fail(ErrorCode::domain, "k must be at least 3");
    if (n <= 0 || n % (k + 1) != 0)
        fail(ErrorCode::domain, "n must be a positive multiple of k+1");
    long long base = n / (k + 1);
    return k112_divisibility(k, n) ? base + 1 : base;
}

Rat cycle_threshold(int k, int s, long long n) {
    if (k < 4 || s < 2)
        fail(ErrorCode::domain, "loose-cycle threshold needs k >= 4 and s >= 2");
    long long span = static_cast<long long>(s) * (k - 1);
    if (n <= 0 || n % span != 0)
        fail(ErrorCode::domain, "n must be a positive multiple of s(k-1)");
    return Rat((s + 1) / 2) * Rat(n, span);
}

}  // namespace tilelab
