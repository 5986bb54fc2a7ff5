#include "sumlab/probmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sumlab {

namespace {

Rational half_pow(int e) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(e));
    Rational q(1, den);
    q.canonicalize();
    return q;
}

Rational three_quarters_pow(int e) {
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), 3, static_cast<unsigned long>(e));
    mpz_ui_pow_ui(den.get_mpz_t(), 4, static_cast<unsigned long>(e));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string format_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

[[noreturn]] void domain_fail(const std::string& msg) { throw std::domain_error(msg); }

}  // namespace

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::Exact: return "Exact";
        case BoundKind::UpperBound: return "UpperBound";
        case BoundKind::LowerBound: return "LowerBound";
    }
    return "?";
}

std::string to_string(const BoundValue& b) { return to_string(b.kind) + ":" + format_sig12(b.value); }

FringeSpec::FringeSpec(int n, int ell, int u, const std::vector<int>& lower_members,
                       const std::vector<int>& upper_members)
    : n_(n), ell_(ell), u_(u), lower_(std::max(n, 1)), upper_(std::max(n, 1)) {
    if (n < 1) throw std::invalid_argument("FringeSpec: n must be positive");
    if (ell < 0 || u < 0) throw std::invalid_argument("FringeSpec: fringe widths must be nonnegative");
    if (n < ell + u) throw std::invalid_argument("FringeSpec: n must be at least ell + u");
    for (int m : lower_members) {
        if (m < 0 || m >= ell) throw std::invalid_argument("FringeSpec: lower fringe member outside {0..ell-1}");
        lower_.insert(m);
    }
    for (int m : upper_members) {
        if (m < n - u || m >= n) throw std::invalid_argument("FringeSpec: upper fringe member outside {n-u..n-1}");
        upper_.insert(m);
    }
}

FringeSpec FringeSpec::uniform(int n) { return FringeSpec(n, 0, 0, {}, {}); }

FringeSpec FringeSpec::sum_dominant_fringe(int n) {
    if (n < 22) throw std::invalid_argument("sum_dominant_fringe needs n >= 22");
    return FringeSpec(n, 11, 11, {0, 2, 3, 7, 8, 9, 10},
                      {n - 11, n - 10, n - 9, n - 8, n - 6, n - 3, n - 2, n - 1});
}

FringeSpec FringeSpec::difference_dominant_fringe(int n) {
    if (n < 6) throw std::invalid_argument("difference_dominant_fringe needs n >= 6");
    return FringeSpec(n, 4, 2, {0, 2, 3}, {n - 2, n - 1});
}

FringeSpec FringeSpec::balanced_fringe(int n) {
    if (n < 12) throw std::invalid_argument("balanced_fringe needs n >= 12");
    return FringeSpec(n, 6, 6, {0, 1, 2, 3, 4, 5}, {n - 6, n - 5, n - 4, n - 3, n - 2, n - 1});
}

Rational p_sum_missing_fringed_low(const FringeSpec& spec, int k) {
    const int n = spec.n(), ell = spec.ell(), u = spec.u();
    if (k < 2 * ell - 1 || k > n - u - 1)
        domain_fail("p_sum_missing_fringed_low: k must satisfy 2*ell-1 <= k <= n-u-1, i.e. " +
                    std::to_string(2 * ell - 1) + " <= k <= " + std::to_string(n - u - 1));
    const int nl = spec.lower().size();
    if (k % 2 != 0) return half_pow(nl) * three_quarters_pow((k + 1) / 2 - ell);
    return half_pow(nl + 1) * three_quarters_pow(k / 2 - ell);
}

Rational p_sum_missing_fringed_high(const FringeSpec& spec, int k) {
    const int n = spec.n(), ell = spec.ell(), u = spec.u();
    if (k < n + ell - 1 || k > 2 * n - 2 * u - 1)
        domain_fail("p_sum_missing_fringed_high: k must satisfy n+ell-1 <= k <= 2n-2u-1, i.e. " +
                    std::to_string(n + ell - 1) + " <= k <= " + std::to_string(2 * n - 2 * u - 1));
    const int nu = spec.upper().size();
    if (k % 2 != 0) return half_pow(nu) * three_quarters_pow(n - (k + 1) / 2 - u);
    return half_pow(nu + 1) * three_quarters_pow(n - 1 - k / 2 - u);
}

Rational p_sum_missing_uniform(int n, int k) {
    if (n < 1) domain_fail("p_sum_missing_uniform: n must be positive");
    if (k < 0 || k > 2 * n - 2)
        domain_fail("p_sum_missing_uniform: k must satisfy 0 <= k <= 2n-2 = " + std::to_string(2 * n - 2));
    if (k <= n - 1) {
        if (k % 2 != 0) return three_quarters_pow((k + 1) / 2);
        return half_pow(1) * three_quarters_pow(k / 2);
    }
    if (k % 2 != 0) return three_quarters_pow(n - (k + 1) / 2);
    return half_pow(1) * three_quarters_pow(n - 1 - k / 2);
}

Rational p_diff_missing_fringed(const FringeSpec& spec, int k) {
    const int n = spec.n(), ell = spec.ell(), u = spec.u();
    if (2 * k < n || k > n - u - ell)
        domain_fail("p_diff_missing_fringed: k must satisfy n/2 <= k <= n-u-ell, i.e. ceil(" +
                    std::to_string(n) + "/2) <= k <= " + std::to_string(n - u - ell));
    return half_pow(spec.lower().size() + spec.upper().size()) *
           three_quarters_pow(n - ell - u - k);
}

BoundValue p_diff_missing_small_bound(int a, int b, int k) {
    if (a >= b) domain_fail("p_diff_missing_small_bound: requires a < b");
    if (k < 1 || 3 * k > 2 * (b - a))
        domain_fail("p_diff_missing_small_bound: k must satisfy 1 <= k <= 2(b-a)/3");
    const double v = std::pow(0.75, (b - a) / 3.0);
    return {std::min(v, 1.0), BoundKind::UpperBound};
}

BoundValue p_diff_missing_uniform(int n, int k) {
    if (k < 1 || k > n - 1)
        domain_fail("p_diff_missing_uniform: k must satisfy 1 <= k <= n-1 = " + std::to_string(n - 1));
    if (2 * k >= n) {
        Rational q = three_quarters_pow(n - k);
        return {q.get_d(), BoundKind::Exact};
    }
    return {std::min(std::pow(0.75, n / 3.0), 1.0), BoundKind::UpperBound};
}

BoundValue sums_coverage_bound(const FringeSpec& spec) {
    const double v = 1.0 - 6.0 * (std::ldexp(1.0, -spec.lower().size()) +
                                  std::ldexp(1.0, -spec.upper().size()));
    return {v, BoundKind::LowerBound};
}

BoundValue diffs_coverage_bound(const FringeSpec& spec) {
    const int n = spec.n(), ell = spec.ell(), u = spec.u();
    if (n < 4 * (ell + u)) domain_fail("diffs_coverage_bound: requires n >= 4(ell+u)");
    const double v = 1.0 - 4.0 * std::ldexp(1.0, -(spec.lower().size() + spec.upper().size())) -
                     (n / 2.0) * std::pow(0.75, (n - ell - u) / 3.0);
    return {v, BoundKind::LowerBound};
}

BoundValue combined_coverage_bound(const FringeSpec& spec) {
    const double sums_failure = 6.0 * (std::ldexp(1.0, -spec.lower().size()) +
                                       std::ldexp(1.0, -spec.upper().size()));
    const double diffs = diffs_coverage_bound(spec).value;
    return {diffs - sums_failure, BoundKind::LowerBound};
}

BoundValue class_count_bound(Classification which, int n) {
    if (n < 1) domain_fail("class_count_bound: n must be positive");
    switch (which) {
        case Classification::SumDominant:
            return {119.0 / 128.0, BoundKind::LowerBound};
        case Classification::DifferenceDominant:
            return {7.0 / 8.0 - (8.0 * n / 9.0) * std::pow(0.75, n / 3.0), BoundKind::LowerBound};
        case Classification::Balanced:
            return {3.0 / 4.0 - (8.0 * n / 9.0) * std::pow(0.75, n / 3.0), BoundKind::LowerBound};
    }
    domain_fail("class_count_bound: unknown class");
}

BigInt total_sumset_size_formula(int n) {
    if (n < 1) domain_fail("total_sumset_size_formula: n must be positive");
    BigInt pow2, pow3;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
    if (n % 2 != 0) {
        mpz_ui_pow_ui(pow3.get_mpz_t(), 3, static_cast<unsigned long>((n - 1) / 2));
        return pow2 * (2 * n - 11) + 19 * pow3;
    }
    mpz_ui_pow_ui(pow3.get_mpz_t(), 3, static_cast<unsigned long>(n / 2));
    return pow2 * (2 * n - 11) + 11 * pow3;
}

BigInt total_diffset_size_reference(int n) {
    if (n < 1) domain_fail("total_diffset_size_reference: n must be positive");
    BigInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return pow2 * (2 * n - 7);
}

BigInt fib_missing_one_count(int m) {
    if (m < 0) domain_fail("fib_missing_one_count: m must be nonnegative");
    BigInt f;
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(m + 2));
    return f;
}

}  // namespace sumlab
