#include "sumlab/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "sumlab/parallel.hpp"

namespace sumlab {

namespace detail {

InclusionRule inclusion_rule(const Rational& p) {
    if (p < 0 || p > 1) throw std::domain_error("inclusion probability must lie in [0,1]");
    if (p == 1) return {0, true};
    mpz_class scaled = p.get_num() << 64;
    scaled /= p.get_den();
    // scaled < 2^64 here since p < 1
    const mpz_class hi = scaled >> 32;
    const mpz_class lo = scaled - (hi << 32);
    InclusionRule rule;
    rule.threshold = (static_cast<std::uint64_t>(hi.get_ui()) << 32) |
                     static_cast<std::uint64_t>(lo.get_ui());
    return rule;
}

void fill_random_set(std::span<std::uint64_t> words, int n, const CounterRng& rng,
                     std::uint64_t trial, const InclusionRule& rule, std::uint64_t index_offset,
                     bool force_zero) {
    std::fill(words.begin(), words.end(), 0);
    if (rule.include_all) {
        for (int e = 0; e < n; ++e) words[e / 64] |= std::uint64_t{1} << (e % 64);
    } else if (rule.threshold != 0) {
        for (int e = 0; e < n; ++e)
            if (rng.at(trial, index_offset + e) < rule.threshold)
                words[e / 64] |= std::uint64_t{1} << (e % 64);
    }
    if (force_zero && n > 0) words[0] |= 1u;
}

}  // namespace detail

namespace {

struct CountsPartial {
    std::uint64_t dd = 0, sd = 0, bal = 0;
};

struct HistPartial {
    std::vector<std::uint64_t> bins;  // dense, index = bin value

    void bump(int bin) {
        if (bin >= static_cast<int>(bins.size())) bins.resize(bin + 1, 0);
        ++bins[bin];
    }
    void merge_from(HistPartial&& other) {
        if (other.bins.size() > bins.size()) bins.resize(other.bins.size(), 0);
        for (std::size_t i = 0; i < other.bins.size(); ++i) bins[i] += other.bins[i];
    }
};

struct SumsPartial {
    std::uint64_t sum_sizes = 0;
    std::uint64_t diff_sizes = 0;
};

Histogram to_histogram(HistPartial&& part, std::uint64_t total) {
    Histogram h;
    h.total = total;
    for (std::size_t i = 0; i < part.bins.size(); ++i)
        if (part.bins[i]) h.bins.emplace(static_cast<int>(i), part.bins[i]);
    return h;
}

double binom_se(double p, std::uint64_t trials) {
    if (trials == 0) return 0;
    return std::sqrt(std::max(p * (1 - p), 0.0) / static_cast<double>(trials));
}

void require_config(const SampleConfig& cfg) {
    if (cfg.n < 1) throw std::domain_error("SampleConfig: n must be positive");
    if (cfg.trials < 1) throw std::domain_error("SampleConfig: trials must be at least 1");
}

}  // namespace

double Histogram::frequency(int bin) const {
    auto it = bins.find(bin);
    if (it == bins.end() || total == 0) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(total);
}

RhoEstimate sample_classes(const SampleConfig& cfg, int threads) {
    require_config(cfg);
    const auto rule = detail::inclusion_rule(cfg.inclusion_prob);
    const CounterRng rng(cfg.seed);
    const int n = cfg.n;
    const int set_words = kernel::words_for(n);
    const int scratch_words = kernel::words_for(2 * n - 1);

    CountsPartial total = parallel_chunks<CountsPartial>(
        cfg.trials, threads,
        [&](std::uint64_t first, std::uint64_t last) {
            CountsPartial part;
            std::vector<std::uint64_t> set(set_words), scratch(scratch_words);
            for (std::uint64_t t = first; t < last; ++t) {
                detail::fill_random_set(set, n, rng, t, rule);
                const int x = kernel::sumset_size(set, n, scratch);
                const int y = kernel::diffset_size(set, n, scratch);
                if (y > x)
                    ++part.dd;
                else if (x > y)
                    ++part.sd;
                else
                    ++part.bal;
            }
            return part;
        },
        [](CountsPartial& acc, CountsPartial&& p) {
            acc.dd += p.dd;
            acc.sd += p.sd;
            acc.bal += p.bal;
        });

    RhoEstimate est;
    est.difference_dominant = total.dd;
    est.sum_dominant = total.sd;
    est.balanced = total.bal;
    est.trials = cfg.trials;
    est.seed = cfg.seed;
    const double t = static_cast<double>(cfg.trials);
    est.rho_minus = total.dd / t;
    est.rho_plus = total.sd / t;
    est.rho_equal = total.bal / t;
    est.se_minus = binom_se(est.rho_minus, cfg.trials);
    est.se_plus = binom_se(est.rho_plus, cfg.trials);
    est.se_equal = binom_se(est.rho_equal, cfg.trials);
    return est;
}

Histogram sample_missing_sums(const SampleConfig& cfg, int threads) {
    require_config(cfg);
    const auto rule = detail::inclusion_rule(cfg.inclusion_prob);
    const CounterRng rng(cfg.seed);
    const int n = cfg.n;
    const int set_words = kernel::words_for(n);
    const int scratch_words = kernel::words_for(2 * n - 1);

    HistPartial total = parallel_chunks<HistPartial>(
        cfg.trials, threads,
        [&](std::uint64_t first, std::uint64_t last) {
            HistPartial part;
            std::vector<std::uint64_t> set(set_words), scratch(scratch_words);
            for (std::uint64_t t = first; t < last; ++t) {
                detail::fill_random_set(set, n, rng, t, rule);
                const int x = (2 * n - 1) - kernel::sumset_size(set, n, scratch);
                part.bump(x);
            }
            return part;
        },
        [](HistPartial& acc, HistPartial&& p) { acc.merge_from(std::move(p)); });
    return to_histogram(std::move(total), cfg.trials);
}

Histogram sample_one_sided(const SampleConfig& cfg, int truncation, int threads) {
    if (truncation < 32)
        throw std::domain_error("sample_one_sided: truncation must be at least 32");
    if (cfg.trials < 1) throw std::domain_error("SampleConfig: trials must be at least 1");
    const auto rule = detail::inclusion_rule(cfg.inclusion_prob);
    const CounterRng rng(cfg.seed);
    const int m = truncation;
    const int set_words = kernel::words_for(m);
    const int sum_words = kernel::words_for(2 * m - 1);
    const bool force_zero = cfg.condition_zero;

    HistPartial total = parallel_chunks<HistPartial>(
        cfg.trials, threads,
        [&](std::uint64_t first, std::uint64_t last) {
            HistPartial part;
            std::vector<std::uint64_t> set(set_words), sums(sum_words);
            for (std::uint64_t t = first; t < last; ++t) {
                detail::fill_random_set(set, m, rng, t, rule, 0, force_zero);
                kernel::sum_bits(set, m, sums);
                // count sums present among {0..m-1}
                int present = 0;
                for (int w = 0; w * 64 < m; ++w) {
                    std::uint64_t word = sums[w];
                    const int remaining = m - w * 64;
                    if (remaining < 64) word &= (std::uint64_t{1} << remaining) - 1;
                    present += std::popcount(word);
                }
                part.bump(m - present);
            }
            return part;
        },
        [](HistPartial& acc, HistPartial&& p) { acc.merge_from(std::move(p)); });
    return to_histogram(std::move(total), cfg.trials);
}

ConvolutionReport convolution_check(const SampleConfig& cfg, int truncation, int threads) {
    require_config(cfg);
    ConvolutionReport report;
    report.two_sided = sample_missing_sums(cfg, threads);

    SampleConfig one = cfg;
    one.condition_zero = false;
    one.seed = CounterRng(cfg.seed).at(0x1d5d, 0);  // independent substream
    report.one_sided = sample_one_sided(one, truncation, threads);

    // self-convolution of the one-sided frequencies
    std::map<int, double> conv;
    for (const auto& [i, ci] : report.one_sided.bins)
        for (const auto& [j, cj] : report.one_sided.bins) {
            conv[i + j] += (static_cast<double>(ci) / report.one_sided.total) *
                           (static_cast<double>(cj) / report.one_sided.total);
        }

    int max_bin = 0;
    if (!report.two_sided.bins.empty()) max_bin = report.two_sided.bins.rbegin()->first;
    if (!conv.empty()) max_bin = std::max(max_bin, conv.rbegin()->first);
    double tv = 0;
    for (int b = 0; b <= max_bin; ++b) {
        const double f = report.two_sided.frequency(b);
        const double g = conv.count(b) ? conv[b] : 0.0;
        const double dev = std::abs(f - g);
        if (f != 0 || g != 0) report.per_bin_abs_dev[b] = dev;
        tv += dev;
    }
    report.total_variation = tv / 2;
    return report;
}

TwoSetAverages sample_two_set_average(const SampleConfig& cfg, bool force_equal, int threads) {
    require_config(cfg);
    const auto rule = detail::inclusion_rule(cfg.inclusion_prob);
    const CounterRng rng(cfg.seed);
    const int n = cfg.n;
    const int set_words = kernel::words_for(n);
    const int out_words = kernel::words_for(2 * n - 1);

    SumsPartial total = parallel_chunks<SumsPartial>(
        cfg.trials, threads,
        [&](std::uint64_t first, std::uint64_t last) {
            SumsPartial part;
            std::vector<std::uint64_t> s(set_words), t_set(set_words), t_rev(set_words),
                out(out_words);
            for (std::uint64_t t = first; t < last; ++t) {
                detail::fill_random_set(s, n, rng, t, rule);
                if (force_equal)
                    std::copy(s.begin(), s.end(), t_set.begin());
                else
                    detail::fill_random_set(t_set, n, rng, t, rule, static_cast<std::uint64_t>(n));
                kernel::sum_bits_pair(s, t_set, n, out);
                part.sum_sizes += static_cast<std::uint64_t>(kernel::popcount(out));
                // |S-T| via S + reflect(T): bit (d + n - 1) marks difference d
                kernel::reflect(t_set, n, t_rev);
                kernel::sum_bits_pair(s, t_rev, n, out);
                part.diff_sizes += static_cast<std::uint64_t>(kernel::popcount(out));
            }
            return part;
        },
        [](SumsPartial& acc, SumsPartial&& p) {
            acc.sum_sizes += p.sum_sizes;
            acc.diff_sizes += p.diff_sizes;
        });

    TwoSetAverages avg;
    avg.trials = cfg.trials;
    avg.seed = cfg.seed;
    avg.mean_sum_size = static_cast<double>(total.sum_sizes) / static_cast<double>(cfg.trials);
    avg.mean_diff_size = static_cast<double>(total.diff_sizes) / static_cast<double>(cfg.trials);
    return avg;
}

std::vector<DensityRow> density_sweep(std::span<const int> n_values, double alpha,
                                      std::uint64_t trials, std::uint64_t seed, bool literal_p,
                                      int threads) {
    if (alpha < 0) throw std::domain_error("density_sweep: alpha must be nonnegative");
    std::vector<DensityRow> rows;
    const CounterRng row_seeder(seed);
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const int n = n_values[i];
        double p;
        if (alpha == 0.0)
            p = literal_p ? 1.0 : 0.5;
        else
            p = std::clamp(std::pow(static_cast<double>(n), -alpha), 0.0, 1.0);
        SampleConfig cfg;
        cfg.n = n;
        cfg.trials = trials;
        cfg.inclusion_prob = Rational(p);  // dyadic, exact
        cfg.inclusion_prob.canonicalize();
        cfg.seed = row_seeder.at(0xd5, i);
        const RhoEstimate est = sample_classes(cfg, threads);
        rows.push_back({n, p, est.rho_minus, est.rho_plus, est.rho_equal});
    }
    return rows;
}

}  // namespace sumlab
