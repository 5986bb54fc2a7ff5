#include "sumlab/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sumlab {

namespace {

const std::vector<int>& base_sum_dominant() {
    static const std::vector<int> s1{0, 2, 3, 4, 7, 11, 12, 14};
    return s1;
}

IntSet from_elements(const std::vector<int>& elems) {
    int max_e = 0;
    for (int e : elems) max_e = std::max(max_e, e);
    IntSet s(max_e + 1);
    for (int e : elems) s.insert(e);
    return s;
}

// S_1 translated by {0, 29, ..., 29k}; imbalance 2k+1.
IntSet odd_family(int k) {
    std::vector<int> elems;
    for (int j = 0; j <= k; ++j)
        for (int e : base_sum_dominant()) elems.push_back(e + 29 * j);
    return from_elements(elems);
}

}  // namespace

IntSet build_prescribed(int x, bool nonempty_zero) {
    if (x == 0) {
        IntSet s(1);
        if (nonempty_zero) s.insert(0);
        return s;
    }
    if (x < 0) {
        // {0..|x|+1} u {2|x|+2}
        const int a = -x;
        IntSet s(2 * a + 3);
        for (int e = 0; e <= a + 1; ++e) s.insert(e);
        s.insert(2 * a + 2);
        return s;
    }
    switch (x) {
        case 1: return from_elements(base_sum_dominant());
        case 2: return from_elements({0, 1, 2, 4, 5, 9, 12, 13, 14, 16, 17});
        case 4: return from_elements({0, 1, 2, 4, 5, 9, 12, 13, 17, 20, 21, 22, 24, 25});
        default: break;
    }
    if (x % 2 != 0) return odd_family((x - 1) / 2);
    // even x >= 6: drop 29 from the next odd family member
    IntSet s = odd_family(x / 2);
    s.erase(29);
    return s;
}

IntSet build_negative_general(int x, int n) {
    if (x >= 0) throw std::domain_error("build_negative_general: x must be negative");
    if (n < -x + 2)
        throw std::domain_error("build_negative_general: requires n >= |x|+2 = " + std::to_string(-x + 2));
    IntSet s(n + (-x) + 1);
    for (int e = 0; e < n; ++e) s.insert(e);
    s.insert(n + (-x));
    return s;
}

std::vector<NamedExample> named_examples() {
    std::vector<NamedExample> out;
    auto add = [&](std::string name, std::vector<int> elems, int sums, int diffs, std::string note) {
        out.push_back({std::move(name), from_elements(elems), sums, diffs, std::move(note)});
    };
    add("S1", {0, 2, 3, 4, 7, 11, 12, 14}, 26, 25,
        "smallest-cardinality sum-dominant set; diameter-minimal for imbalance 1");
    add("S1prime", {0, 1, 2, 4, 5, 9, 12, 13, 14}, 28, 27,
        "the other diameter-14 set with imbalance 1, up to reflection");
    add("S2", {0, 1, 2, 4, 5, 9, 12, 13, 14, 16, 17}, 35, 33,
        "diameter-minimal set with imbalance 2");
    add("S4", {0, 1, 2, 4, 5, 9, 12, 13, 17, 20, 21, 22, 24, 25}, 51, 47,
        "diameter-minimal set with imbalance 4 (Kapoor-Wong: unique up to reflection below diameter 26)");
    add("S4prime", {0, 1, 2, 4, 5, 9, 12, 13, 14, 16, 17, 21, 24, 25, 26, 28, 29}, 59, 55,
        "Pigarev-Freiman set with imbalance 4");
    add("ruzsa_U", {0, 1, 3, 4, 5, 6, 7, 10}, 19, 19,
        "Ruzsa's candidate; actually balanced with 19 sums and 19 differences");
    add("hegarty_A",
        {0, 1, 2, 4, 5, 9, 12, 13, 17, 20, 21, 22, 24, 25, 29, 32, 33, 37, 40, 41, 42, 44, 45}, 91, 83,
        "Hegarty's S4 u (S4+20); log 91 / log 83 is the best known digit-set exponent");
    return out;
}

PrescribedReport verify_prescribed(int x_min, int x_max) {
    PrescribedReport report;
    for (int x = x_min; x <= x_max; ++x) {
        IntSet s = build_prescribed(x);
        const int limit = 17 * std::abs(x);
        const int max_element = s.empty() ? 0 : s.max();
        const int imbalance = sumset(s).size() - diffset(s).size();
        const bool ok = imbalance == x && max_element <= limit && (s.empty() || s.min() == 0);
        report.entries.push_back({x, imbalance, max_element, limit, ok});
        report.all_ok = report.all_ok && ok;
    }
    return report;
}

}  // namespace sumlab
