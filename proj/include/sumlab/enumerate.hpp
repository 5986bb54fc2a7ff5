#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sumlab/probmodel.hpp"
#include "sumlab/setcore.hpp"

namespace sumlab {

struct FilterAll {};
struct FilterContainsEndpoints {};  // 0 in S and n-1 in S

using Filter = std::variant<FilterAll, FilterContainsEndpoints, FringeSpec>;

std::string filter_mode_name(const Filter& f);  // "all" | "endpoints" | "fringe"

inline constexpr int kDefaultEnumGuard = 30;
inline constexpr int kDefaultDiameterGuard = 26;

// Exact census of subsets by (|S+S|, |S-S|). Counts are raw subset counts;
// a set and its reflection are counted separately.
struct JointHistogram {
    int n = 0;
    Filter filter = FilterAll{};
    std::map<std::pair<int, int>, std::uint64_t> counts;

    std::uint64_t total() const;
};

struct TallyReport {
    int n = 0;
    BigInt sum_total;          // sum of |S+S| over admitted sets
    BigInt diff_total;         // sum of |S-S|
    BigInt sum_dominant;
    BigInt difference_dominant;
    BigInt balanced;
    // counts reindexed by missing pairs (j, k) = (2n-1-|S+S|, 2n-1-|S-S|)
    std::map<std::pair<int, int>, std::uint64_t> missing_pairs;
};

struct SumTotalCheck {
    int n = 0;
    BigInt enumerated;
    BigInt formula;
    bool ok = false;
};

// Census over the completions A = L u R u U of a fringe spec.
struct FringeSurvey {
    int n = 0;
    std::uint64_t completions = 0;
    std::uint64_t sum_dominant = 0;
    std::uint64_t difference_dominant = 0;
    std::uint64_t balanced = 0;
    std::uint64_t sums_cover_target = 0;  // A+A contains both coverage ranges
    std::uint64_t diffs_full = 0;         // |A-A| = 2n-1
    int min_sum_size = 0;
    int max_sum_size = 0;
    int max_diff_size = 0;
    std::optional<IntSet> sum_union;         // union of A+A over completions
    std::optional<IntSet> sum_intersection;  // intersection of A+A
};

struct ClassRow {
    int n = 0;
    std::uint64_t sum_dominant = 0;
    std::uint64_t difference_dominant = 0;
    std::uint64_t balanced = 0;
    std::uint64_t total = 0;
};

// Exhaustive joint histogram over all admitted subsets of {0..n-1}.
// Deterministic for any thread count. Throws resource_error when n exceeds
// the guard (the Monte Carlo sampler covers larger n).
JointHistogram enumerate_joint(int n, const Filter& filter, int threads = 0,
                               int guard = kDefaultEnumGuard);

TallyReport tally(const JointHistogram& hist);

// Enumeration total of |S+S| versus the closed form.
SumTotalCheck verify_sum_total(int n, int threads = 0, int guard = kDefaultEnumGuard);

// Exhaustive survey of all middle completions of a fringe spec. The guard
// applies to the middle width n-ell-u.
FringeSurvey fringe_survey(const FringeSpec& spec, int threads = 0, int guard = kDefaultEnumGuard);

// All sets with min 0, max <= max_diameter and |S+S|-|S-S| = imbalance,
// restricted to the minimal diameter among matches; reflections included.
std::vector<IntSet> minimal_diameter_search(int max_diameter, int imbalance, int threads = 0,
                                            int guard = kDefaultDiameterGuard);

// Exhaustive class counts for each n in [n_min, n_max].
std::vector<ClassRow> class_proportions(int n_min, int n_max, int threads = 0,
                                        int guard = kDefaultEnumGuard);

}  // namespace sumlab
