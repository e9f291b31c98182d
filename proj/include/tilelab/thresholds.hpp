#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tilelab/hypergraph.hpp"
#include "tilelab/partite.hpp"
#include "tilelab/rational.hpp"

namespace tilelab {

// Largest integer not expressible as a nonnegative combination of the
// entries. Zeros are ignored; the positive entries must have gcd 1.
// Returns -1 when some entry equals 1.
long long frobenius(const std::vector<long long>& b);

// g(a2-a1, ..., ak-a1) + 1 for a profile whose differences are coprime.
long long profile_constant(const PartiteProfile& profile);

enum class ThresholdCase {
    half_n,       // S(F) = {1} or gcd(S(F)) > 1
    sigma_n,      // gcd(F) = 1
    max_sigma_p,  // gcd(S(F)) = 1 and gcd(F) = d > 1
};

// Main term of the general codegree-threshold formula; the o(n) slack is
// implied, never estimated numerically.
struct ThresholdReport {
    Rat value;
    ThresholdCase case_tag;
    std::set<int> s_set;
    long long gcd_s = 0;
    std::optional<long long> gcd_f;
    std::optional<long long> smallest_prime = std::nullopt;
    Rat sigma;
};

ThresholdReport mycroft_threshold(const Hypergraph& f, long long n,
                                  long long budget = kDefaultBudget);

// a1*n/m + f(n) + C where f(n) maximizes ex(n', K)*k/binom(n', k-1) over
// the window n' = (m-a1)n/m + i, 1-C <= i <= 1. The Turan number is
// injected; this module never fabricates one.
using TuranFn = std::function<long long(long long)>;
Rat degree_bound(const PartiteProfile& profile, long long n,
                 const TuranFn& turan_fn);

// Exact threshold for the (1,...,1,2) pattern: n/(k+1)+1 when the Steiner
// divisibility conditions hold at n' = kn/(k+1)+1, else n/(k+1).
long long k112_threshold(int k, long long n);

// Threshold for tiling the loose cycle with s edges.
Rat cycle_threshold(int k, int s, long long n);

// Necessary divisibility conditions for a Steiner system S(k-1, k, n'):
// (k-i) | binom(n'-i, k-1-i) for all 0 <= i <= k-2.
bool steiner_divisibility(int k, long long n_prime);

// k112's divisibility witness at a given n (evaluates the conditions at
// n' = kn/(k+1)+1).
bool k112_divisibility(int k, long long n);

}  // namespace tilelab
