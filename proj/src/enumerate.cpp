#include "sumlab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>

#include "sumlab/errors.hpp"
#include "sumlab/parallel.hpp"

namespace sumlab {

namespace {

// Rank space of admitted subsets: set = base | (rank << shift) with rank
// running over 2^middle_bits values.
struct RankSpace {
    int n = 0;
    int middle_bits = 0;
    int shift = 0;
    std::uint64_t base = 0;  // valid when n <= 64
    std::vector<int> base_members;
};

RankSpace rank_space(int n, const Filter& filter) {
    RankSpace rs;
    rs.n = n;
    if (std::holds_alternative<FilterAll>(filter)) {
        rs.middle_bits = n;
        rs.shift = 0;
    } else if (std::holds_alternative<FilterContainsEndpoints>(filter)) {
        rs.base_members.push_back(0);
        if (n > 1) rs.base_members.push_back(n - 1);
        rs.middle_bits = std::max(n - 2, 0);
        rs.shift = 1;
    } else {
        const auto& spec = std::get<FringeSpec>(filter);
        if (spec.n() != n)
            throw std::invalid_argument("enumerate_joint: fringe spec universe differs from n");
        for (int m : spec.lower().elements()) rs.base_members.push_back(m);
        for (int m : spec.upper().elements()) rs.base_members.push_back(m);
        rs.middle_bits = spec.middle_count();
        rs.shift = spec.middle_first();
    }
    if (n <= 64)
        for (int m : rs.base_members) rs.base |= std::uint64_t{1} << m;
    return rs;
}

struct DenseJoint {
    int side = 0;
    std::vector<std::uint64_t> cells;

    void init(int s) {
        side = s;
        cells.assign(static_cast<std::size_t>(s) * s, 0);
    }
    void add(int x, int y) { ++cells[static_cast<std::size_t>(x) * side + y]; }
    void merge_from(DenseJoint&& other) {
        if (cells.empty()) {
            *this = std::move(other);
            return;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) cells[i] += other.cells[i];
    }
};

DenseJoint census_small(const RankSpace& rs, int threads) {
    const std::uint64_t count = std::uint64_t{1} << rs.middle_bits;
    const int side = 2 * rs.n;
    return parallel_chunks<DenseJoint>(
        count, threads,
        [&](std::uint64_t first, std::uint64_t last) {
            DenseJoint part;
            part.init(side);
            for (std::uint64_t rank = first; rank < last; ++rank) {
                const std::uint32_t mask =
                    static_cast<std::uint32_t>(rs.base | (rank << rs.shift));
                part.add(kernel::sumset_size(mask), kernel::diffset_size(mask));
            }
            return part;
        },
        [](DenseJoint& acc, DenseJoint&& p) { acc.merge_from(std::move(p)); });
}

DenseJoint census_general(const RankSpace& rs, int threads) {
    const std::uint64_t count = std::uint64_t{1} << rs.middle_bits;
    const int n = rs.n;
    const int side = 2 * n;
    const int set_words = kernel::words_for(n);
    std::vector<std::uint64_t> base_words(set_words, 0);
    for (int m : rs.base_members) base_words[m / 64] |= std::uint64_t{1} << (m % 64);

    return parallel_chunks<DenseJoint>(
        count, threads,
        [&](std::uint64_t first, std::uint64_t last) {
            DenseJoint part;
            part.init(side);
            std::vector<std::uint64_t> set(set_words);
            std::vector<std::uint64_t> scratch(kernel::words_for(2 * n - 1));
            for (std::uint64_t rank = first; rank < last; ++rank) {
                std::copy(base_words.begin(), base_words.end(), set.begin());
                for (std::uint64_t r = rank; r;) {
                    const int i = std::countr_zero(r);
                    r &= r - 1;
                    const int pos = rs.shift + i;
                    set[pos / 64] |= std::uint64_t{1} << (pos % 64);
                }
                const int x = kernel::sumset_size(set, n, scratch);
                const int y = kernel::diffset_size(set, n, scratch);
                part.add(x, y);
            }
            return part;
        },
        [](DenseJoint& acc, DenseJoint&& p) { acc.merge_from(std::move(p)); });
}

}  // namespace

std::string filter_mode_name(const Filter& f) {
    if (std::holds_alternative<FilterAll>(f)) return "all";
    if (std::holds_alternative<FilterContainsEndpoints>(f)) return "endpoints";
    return "fringe";
}

std::uint64_t JointHistogram::total() const {
    std::uint64_t t = 0;
    for (const auto& [key, c] : counts) t += c;
    return t;
}

JointHistogram enumerate_joint(int n, const Filter& filter, int threads, int guard) {
    if (n < 1) throw std::domain_error("enumerate_joint: n must be positive");
    if (n > std::min(guard, 48))
        throw resource_error("enumerate_joint: n = " + std::to_string(n) +
                             " exceeds the exhaustive guard of " +
                             std::to_string(std::min(guard, 48)) +
                             "; use the montecarlo samplers for larger universes");
    const RankSpace rs = rank_space(n, filter);
    DenseJoint dense = (n <= 32) ? census_small(rs, threads) : census_general(rs, threads);

    JointHistogram hist;
    hist.n = n;
    hist.filter = filter;
    for (int x = 0; x < dense.side; ++x)
        for (int y = 0; y < dense.side; ++y) {
            const std::uint64_t c = dense.cells[static_cast<std::size_t>(x) * dense.side + y];
            if (c) hist.counts.emplace(std::make_pair(x, y), c);
        }
    return hist;
}

TallyReport tally(const JointHistogram& hist) {
    TallyReport report;
    report.n = hist.n;
    report.sum_total = 0;
    report.diff_total = 0;
    report.sum_dominant = 0;
    report.difference_dominant = 0;
    report.balanced = 0;
    const int full = 2 * hist.n - 1;
    for (const auto& [key, c] : hist.counts) {
        const auto [x, y] = key;
        report.sum_total += BigInt(static_cast<unsigned long>(x)) * static_cast<unsigned long>(c);
        report.diff_total += BigInt(static_cast<unsigned long>(y)) * static_cast<unsigned long>(c);
        if (x > y)
            report.sum_dominant += static_cast<unsigned long>(c);
        else if (y > x)
            report.difference_dominant += static_cast<unsigned long>(c);
        else
            report.balanced += static_cast<unsigned long>(c);
        report.missing_pairs.emplace(std::make_pair(full - x, full - y), c);
    }
    return report;
}

SumTotalCheck verify_sum_total(int n, int threads, int guard) {
    SumTotalCheck check;
    check.n = n;
    check.enumerated = tally(enumerate_joint(n, FilterAll{}, threads, guard)).sum_total;
    check.formula = total_sumset_size_formula(n);
    check.ok = check.enumerated == check.formula;
    return check;
}

namespace {

struct SurveyPartial {
    std::uint64_t sd = 0, dd = 0, bal = 0;
    std::uint64_t cover = 0, diff_full = 0;
    int min_sum = INT_MAX, max_sum = -1, max_diff = -1;
    std::vector<std::uint64_t> sum_union;
    std::vector<std::uint64_t> sum_inter;
    bool seen = false;
};

}  // namespace

FringeSurvey fringe_survey(const FringeSpec& spec, int threads, int guard) {
    const int n = spec.n();
    const int m = spec.middle_count();
    if (m > std::min(guard, 48))
        throw resource_error("fringe_survey: middle width " + std::to_string(m) +
                             " exceeds the exhaustive guard of " +
                             std::to_string(std::min(guard, 48)));
    const int set_words = kernel::words_for(n);
    const int sum_words = kernel::words_for(2 * n - 1);
    const int diff_words = kernel::words_for(n);

    std::vector<std::uint64_t> base(set_words, 0);
    for (int e : spec.lower().elements()) base[e / 64] |= std::uint64_t{1} << (e % 64);
    for (int e : spec.upper().elements()) base[e / 64] |= std::uint64_t{1} << (e % 64);

    // Coverage target: {2l-1..n-u-1} u {n+l-1..2n-2u-1}, clamped to >= 0.
    std::vector<std::uint64_t> target(sum_words, 0);
    auto mark_range = [&](int lo, int hi) {
        for (int k = std::max(lo, 0); k <= hi; ++k) target[k / 64] |= std::uint64_t{1} << (k % 64);
    };
    mark_range(2 * spec.ell() - 1, n - spec.u() - 1);
    mark_range(n + spec.ell() - 1, 2 * n - 2 * spec.u() - 1);

    const std::uint64_t count = std::uint64_t{1} << m;
    SurveyPartial total = parallel_chunks<SurveyPartial>(
        count, threads,
        [&](std::uint64_t first, std::uint64_t last) {
            SurveyPartial part;
            part.sum_union.assign(sum_words, 0);
            part.sum_inter.assign(sum_words, ~std::uint64_t{0});
            std::vector<std::uint64_t> set(set_words), sums(sum_words), diffs(diff_words);
            for (std::uint64_t rank = first; rank < last; ++rank) {
                std::copy(base.begin(), base.end(), set.begin());
                for (std::uint64_t r = rank; r;) {
                    const int i = std::countr_zero(r);
                    r &= r - 1;
                    const int pos = spec.middle_first() + i;
                    set[pos / 64] |= std::uint64_t{1} << (pos % 64);
                }
                kernel::sum_bits(set, n, sums);
                kernel::nonneg_diff_bits(set, n, diffs);
                const int x = kernel::popcount(sums);
                const int pos_diffs = kernel::popcount(diffs);
                const int y = pos_diffs == 0 ? 0 : 2 * pos_diffs - 1;
                if (x > y)
                    ++part.sd;
                else if (y > x)
                    ++part.dd;
                else
                    ++part.bal;
                bool covered = true;
                for (int w = 0; w < sum_words; ++w) {
                    part.sum_union[w] |= sums[w];
                    part.sum_inter[w] &= sums[w];
                    if ((sums[w] & target[w]) != target[w]) covered = false;
                }
                if (covered) ++part.cover;
                if (y == 2 * n - 1) ++part.diff_full;
                part.min_sum = std::min(part.min_sum, x);
                part.max_sum = std::max(part.max_sum, x);
                part.max_diff = std::max(part.max_diff, y);
                part.seen = true;
            }
            return part;
        },
        [](SurveyPartial& acc, SurveyPartial&& p) {
            if (!p.seen) return;
            if (!acc.seen) {
                acc = std::move(p);
                return;
            }
            acc.sd += p.sd;
            acc.dd += p.dd;
            acc.bal += p.bal;
            acc.cover += p.cover;
            acc.diff_full += p.diff_full;
            acc.min_sum = std::min(acc.min_sum, p.min_sum);
            acc.max_sum = std::max(acc.max_sum, p.max_sum);
            acc.max_diff = std::max(acc.max_diff, p.max_diff);
            for (std::size_t w = 0; w < acc.sum_union.size(); ++w) {
                acc.sum_union[w] |= p.sum_union[w];
                acc.sum_inter[w] &= p.sum_inter[w];
            }
        });

    FringeSurvey survey;
    survey.n = n;
    survey.completions = count;
    survey.sum_dominant = total.sd;
    survey.difference_dominant = total.dd;
    survey.balanced = total.bal;
    survey.sums_cover_target = total.cover;
    survey.diffs_full = total.diff_full;
    survey.min_sum_size = total.min_sum;
    survey.max_sum_size = total.max_sum;
    survey.max_diff_size = total.max_diff;
    IntSet uni(2 * n - 1), inter(2 * n - 1);
    for (int b = 0; b < 2 * n - 1; ++b) {
        if ((total.sum_union[b / 64] >> (b % 64)) & 1u) uni.insert(b);
        if ((total.sum_inter[b / 64] >> (b % 64)) & 1u) inter.insert(b);
    }
    survey.sum_union = std::move(uni);
    survey.sum_intersection = std::move(inter);
    return survey;
}

std::vector<IntSet> minimal_diameter_search(int max_diameter, int imbalance, int threads, int guard) {
    if (max_diameter < 0) throw std::domain_error("minimal_diameter_search: diameter must be nonnegative");
    if (max_diameter > guard)
        throw resource_error("minimal_diameter_search: diameter " + std::to_string(max_diameter) +
                             " exceeds the guard of " + std::to_string(guard));
    for (int d = 0; d <= max_diameter; ++d) {
        std::vector<IntSet> matches;
        if (d == 0) {
            if (imbalance == 0) {
                IntSet s(1);
                s.insert(0);
                matches.push_back(std::move(s));
            }
        } else {
            const std::uint64_t count = std::uint64_t{1} << (d - 1);
            const std::uint64_t ends = 1u | (std::uint64_t{1} << d);
            auto ranks = parallel_chunks<std::vector<std::uint64_t>>(
                count, threads,
                [&](std::uint64_t first, std::uint64_t last) {
                    std::vector<std::uint64_t> found;
                    for (std::uint64_t rank = first; rank < last; ++rank) {
                        const std::uint32_t mask = static_cast<std::uint32_t>(ends | (rank << 1));
                        if (kernel::sumset_size(mask) - kernel::diffset_size(mask) == imbalance)
                            found.push_back(rank);
                    }
                    return found;
                },
                [](std::vector<std::uint64_t>& acc, std::vector<std::uint64_t>&& p) {
                    acc.insert(acc.end(), p.begin(), p.end());
                });
            for (std::uint64_t rank : ranks) {
                IntSet s(d + 1);
                const std::uint64_t mask = ends | (rank << 1);
                for (int b = 0; b <= d; ++b)
                    if ((mask >> b) & 1u) s.insert(b);
                matches.push_back(std::move(s));
            }
        }
        if (!matches.empty()) return matches;
    }
    return {};
}

std::vector<ClassRow> class_proportions(int n_min, int n_max, int threads, int guard) {
    if (n_min < 1 || n_max < n_min)
        throw std::domain_error("class_proportions: need 1 <= n_min <= n_max");
    std::vector<ClassRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        const TallyReport t = tally(enumerate_joint(n, FilterAll{}, threads, guard));
        ClassRow row;
        row.n = n;
        row.sum_dominant = t.sum_dominant.get_ui();
        row.difference_dominant = t.difference_dominant.get_ui();
        row.balanced = t.balanced.get_ui();
        row.total = row.sum_dominant + row.difference_dominant + row.balanced;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace sumlab
