#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sumlab/setcore.hpp"

namespace sumlab {

// Exact arbitrary-precision arithmetic, backed by GMP.
using Rational = mpq_class;
using BigInt = mpz_class;

// Renders in lowest terms, "p/q" (or just "p" when q == 1).
std::string to_string(const Rational& q);

enum class BoundKind { Exact, UpperBound, LowerBound };

// A probability-like number tagged with whether it is exact or a one-sided
// bound. Upper bounds are clamped to <= 1; lower bounds may be negative and
// are reported as-is.
struct BoundValue {
    double value;
    BoundKind kind;
};

std::string to_string(BoundKind k);
std::string to_string(const BoundValue& b);  // "<kind>:<12 significant digits>"

// The conditioned random-set model: A = L u R u U where L and U are fixed
// fringes inside {0..ell-1} and {n-u..n-1}, and R is uniform over subsets of
// the middle range {ell..n-u-1}.
class FringeSpec {
public:
    FringeSpec(int n, int ell, int u, const std::vector<int>& lower_members,
               const std::vector<int>& upper_members);

    static FringeSpec uniform(int n);  // ell = u = 0, empty fringes

    // The three fringe choices used by the class-count lower bounds.
    static FringeSpec sum_dominant_fringe(int n);         // ell = u = 11, |L|=7, |U|=8
    static FringeSpec difference_dominant_fringe(int n);  // ell = 4, u = 2
    static FringeSpec balanced_fringe(int n);             // ell = u = 6, full fringes

    int n() const { return n_; }
    int ell() const { return ell_; }
    int u() const { return u_; }
    const IntSet& lower() const { return lower_; }
    const IntSet& upper() const { return upper_; }
    int middle_count() const { return n_ - ell_ - u_; }
    int middle_first() const { return ell_; }

private:
    int n_, ell_, u_;
    IntSet lower_, upper_;  // universe n, members restricted to the fringe windows
};

// P(k not in A+A) for 2*ell-1 <= k <= n-u-1:
//   (1/2)^|L| (3/4)^((k+1)/2-ell)  for odd k,
//   (1/2)^(|L|+1) (3/4)^(k/2-ell)  for even k.
Rational p_sum_missing_fringed_low(const FringeSpec& spec, int k);

// P(k not in A+A) for n+ell-1 <= k <= 2n-2u-1; equals the low-end formula on
// the reflected model at k' = 2n-2-k.
Rational p_sum_missing_fringed_high(const FringeSpec& spec, int k);

// P(k not in A+A) for a uniform random subset of {0..n-1}, 0 <= k <= 2n-2.
Rational p_sum_missing_uniform(int n, int k);

// P(k not in A-A) = (1/2)^(|L|+|U|) (3/4)^(n-ell-u-k) for n/2 <= k <= n-u-ell.
Rational p_diff_missing_fringed(const FringeSpec& spec, int k);

// Upper bound (3/4)^((b-a)/3) on P(k not in R-R), R uniform over subsets of
// {a..b-1}, valid for 1 <= k <= 2(b-a)/3.
BoundValue p_diff_missing_small_bound(int a, int b, int k);

// P(k not in A-A) for uniform A: exact (3/4)^(n-k) when n/2 <= k <= n-1,
// else the upper bound (3/4)^(n/3).
BoundValue p_diff_missing_uniform(int n, int k);

// Lower bound 1 - 6(2^-|L| + 2^-|U|) on the probability that every sum in
// {2ell-1..n-u-1} u {n+ell-1..2n-2u-1} is present in A+A.
BoundValue sums_coverage_bound(const FringeSpec& spec);

// Lower bound 1 - 4(1/2)^(|L|+|U|) - (n/2)(3/4)^((n-ell-u)/3) on the
// probability that {-(n-ell-u)..n-ell-u} is contained in A-A.
// Requires n >= 4(ell+u).
BoundValue diffs_coverage_bound(const FringeSpec& spec);

// Lower bound on the probability that both coverage events above hold
// (their failure bounds added together).
BoundValue combined_coverage_bound(const FringeSpec& spec);

// Per-class probability lower bounds behind the class-count guarantees:
//   SumDominant        -> 119/128 (constant),
//   DifferenceDominant -> 7/8 - (8n/9)(3/4)^(n/3),
//   Balanced           -> 3/4 - (8n/9)(3/4)^(n/3).
BoundValue class_count_bound(Classification which, int n);

// Sum of |S+S| over all subsets S of {0..n-1}:
//   2^n(2n-11) + 19*3^((n-1)/2) for odd n, 2^n(2n-11) + 11*3^(n/2) for even.
BigInt total_sumset_size_formula(int n);

// Main term 2^n(2n-7) of the total difference-set size; the true total
// differs by O(n 6^(n/3)).
BigInt total_diffset_size_reference(int n);

// Number of subsets R of {0..m-1} with 1 not in R-R; equals F(m+2) with
// F(1) = F(2) = 1.
BigInt fib_missing_one_count(int m);

}  // namespace sumlab
