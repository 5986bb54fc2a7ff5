#pragma once

#include <string>
#include <vector>

#include "sumlab/setcore.hpp"

namespace sumlab {

struct NamedExample {
    std::string name;
    IntSet set;
    int expected_sum_size;
    int expected_diff_size;
    std::string source_note;
};

// A set S inside {0..17|x|} with |S+S| - |S-S| = x, for any integer x.
// x = 0 yields the empty set unless nonempty_zero is set (then {0}).
IntSet build_prescribed(int x, bool nonempty_zero = false);

// The interval-plus-outlier family {0..n-1} u {n+|x|}; imbalance is exactly
// x for any x < 0 and n >= |x|+2.
IntSet build_negative_general(int x, int n);

// Catalog of reference sets with their expected sumset/difference-set sizes.
std::vector<NamedExample> named_examples();

struct PrescribedCheck {
    int x;
    int imbalance;
    int max_element;  // 0 for the empty set
    int limit;        // 17|x|
    bool ok;
};

struct PrescribedReport {
    std::vector<PrescribedCheck> entries;
    bool all_ok = true;
};

// Builds every x in [x_min, x_max] and checks imbalance and diameter against
// the contract; failures are reported, not thrown.
PrescribedReport verify_prescribed(int x_min, int x_max);

}  // namespace sumlab
