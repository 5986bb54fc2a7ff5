#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sumlab/probmodel.hpp"
#include "sumlab/rng.hpp"
#include "sumlab/setcore.hpp"

namespace sumlab {

// A seeded random-subset experiment: each element of {0..n-1} is included
// independently with inclusion_prob. Identical configs produce identical
// outputs under any thread count.
struct SampleConfig {
    int n = 0;
    std::uint64_t trials = 0;
    Rational inclusion_prob{1, 2};
    std::uint64_t seed = 0;
    bool condition_zero = false;
};

struct Histogram {
    std::map<int, std::uint64_t> bins;
    std::uint64_t total = 0;

    double frequency(int bin) const;
};

struct RhoEstimate {
    double rho_minus = 0;  // difference-dominant fraction
    double rho_plus = 0;   // sum-dominant fraction
    double rho_equal = 0;  // balanced fraction
    double se_minus = 0, se_plus = 0, se_equal = 0;
    std::uint64_t difference_dominant = 0, sum_dominant = 0, balanced = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct ConvolutionReport {
    Histogram two_sided;                  // missing sums of subsets of {0..n-1}
    Histogram one_sided;                  // truncated one-sided missing sums
    std::map<int, double> per_bin_abs_dev;  // |two_sided freq - self-convolution|
    double total_variation = 0;
};

struct TwoSetAverages {
    double mean_sum_size = 0;
    double mean_diff_size = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct DensityRow {
    int n = 0;
    double inclusion_prob = 0;
    double difference_dominant = 0;
    double sum_dominant = 0;
    double balanced = 0;
};

// Classifies `trials` sampled subsets; fractions with binomial standard errors.
RhoEstimate sample_classes(const SampleConfig& cfg, int threads = 0);

// Histogram of the number of missing sums, 2n-1 - |S+S|.
Histogram sample_missing_sums(const SampleConfig& cfg, int threads = 0);

// One-sided variant: samples A inside {0..m-1} and counts the elements of
// {0..m-1} absent from A+A. condition_zero forces 0 into A (equivalent to
// rejection sampling on 0 in A). Requires m >= 32.
Histogram sample_one_sided(const SampleConfig& cfg, int truncation, int threads = 0);

// Compares the two-sided histogram at cfg.n against the discrete
// self-convolution of the (unconditioned) one-sided histogram.
ConvolutionReport convolution_check(const SampleConfig& cfg, int truncation = 64, int threads = 0);

// Mean |S+T| and |S-T| over independent pairs; force_equal sets T = S as a
// diagnostic (means then approach the one-set averages).
TwoSetAverages sample_two_set_average(const SampleConfig& cfg, bool force_equal = false,
                                      int threads = 0);

// For each n, class fractions under inclusion probability n^(-alpha).
// alpha = 0 means p = 1/2 unless literal_p is set (then p = 1).
std::vector<DensityRow> density_sweep(std::span<const int> n_values, double alpha,
                                      std::uint64_t trials, std::uint64_t seed,
                                      bool literal_p = false, int threads = 0);

namespace detail {

// floor(p * 2^64); the whole-range sentinel is handled by include_all.
struct InclusionRule {
    std::uint64_t threshold = 0;
    bool include_all = false;
};
InclusionRule inclusion_rule(const Rational& p);

// Fills `words` (zeroed first) with the trial's sampled subset of {0..n-1}.
void fill_random_set(std::span<std::uint64_t> words, int n, const CounterRng& rng,
                     std::uint64_t trial, const InclusionRule& rule, std::uint64_t index_offset = 0,
                     bool force_zero = false);

}  // namespace detail

}  // namespace sumlab
