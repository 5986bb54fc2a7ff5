#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "naive_oracle.hpp"
#include "sumlab/rng.hpp"
#include "sumlab/setcore.hpp"

using namespace sumlab;

namespace {

IntSet random_subset(int n, CounterRng& rng, std::uint64_t trial) {
    IntSet s(n);
    for (int e = 0; e < n; ++e)
        if (rng.at(trial, e) >> 63) s.insert(e);
    return s;
}

void check_against_naive(const IntSet& s) {
    const auto members = s.elements();
    const auto want_sums = oracle::naive_sumset(members);
    const auto want_diffs = oracle::naive_diffset(members);

    const IntSet sums = sumset(s);
    REQUIRE(sums.universe_size() == 2 * s.universe_size() - 1);
    CHECK(sums.size() == static_cast<int>(want_sums.size()));
    for (int k = 0; k < sums.universe_size(); ++k)
        CHECK(sums.contains(k) == (want_sums.count(k) > 0));

    const SignedSet diffs = diffset(s);
    REQUIRE(diffs.half_width() == s.universe_size() - 1);
    CHECK(diffs.size() == static_cast<int>(want_diffs.size()));
    for (int d = -diffs.half_width(); d <= diffs.half_width(); ++d)
        CHECK(diffs.contains(d) == (want_diffs.count(d) > 0));
}

}  // namespace

TEST_CASE("sumset and diffset match the worked examples") {
    IntSet s(4, {0, 1, 3});
    CHECK(sumset(s) == IntSet(7, {0, 1, 2, 3, 4, 6}));
    SignedSet d = diffset(s);
    CHECK(d.size() == 7);
    for (int k = -3; k <= 3; ++k) CHECK(d.contains(k));
    CHECK(classify(s) == Classification::DifferenceDominant);

    IntSet s1(15, {0, 2, 3, 4, 7, 11, 12, 14});
    IntSet expected_sums = IntSet::full(29);
    expected_sums.erase(1);
    expected_sums.erase(20);
    expected_sums.erase(27);
    CHECK(sumset(s1) == expected_sums);
    SignedSet d1 = diffset(s1);
    CHECK(d1.size() == 25);
    CHECK_FALSE(d1.contains(13));
    CHECK_FALSE(d1.contains(-13));
    CHECK_FALSE(d1.contains(6));
    CHECK_FALSE(d1.contains(-6));
    CHECK(classify(s1) == Classification::SumDominant);
}

TEST_CASE("empty and singleton edge cases") {
    IntSet empty(5);
    CHECK(sumset(empty).empty());
    CHECK(diffset(empty).empty());
    CHECK(classify(empty) == Classification::Balanced);
    CHECK(missing_counts(empty).missing_sums == 9);
    CHECK(missing_counts(empty).missing_diffs == 9);

    IntSet singleton(6, {5});
    SignedSet d = diffset(singleton);
    CHECK(d.size() == 1);
    CHECK(d.contains(0));
}

TEST_CASE("classification of an arithmetic progression is balanced") {
    IntSet s(3, {0, 1, 2});
    CHECK(classify(s) == Classification::Balanced);
}

TEST_CASE("missing_counts matches the j,k bookkeeping") {
    IntSet s1(15, {0, 2, 3, 4, 7, 11, 12, 14});
    const auto mc = missing_counts(s1);
    CHECK(mc.missing_sums == 3);
    CHECK(mc.missing_diffs == 4);

    IntSet full = IntSet::full(9);
    CHECK(missing_counts(full).missing_sums == 0);
    CHECK(missing_counts(full).missing_diffs == 0);
}

TEST_CASE("is_symmetric") {
    CHECK(is_symmetric(IntSet(5, {0, 1, 3, 4})));
    CHECK_FALSE(is_symmetric(IntSet(15, {0, 2, 3, 4, 7, 11, 12, 14})));
    CHECK(is_symmetric(IntSet(8, {7})));
    CHECK(is_symmetric(IntSet(3)));
}

TEST_CASE("symmetric sets are balanced (exhaustive n <= 16, random n = 160)") {
    for (int n = 1; n <= 16; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            IntSet s(n);
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1u) s.insert(i);
            if (is_symmetric(s)) CHECK(classify(s) == Classification::Balanced);
        }
    }
    CounterRng rng(41);
    for (std::uint64_t t = 0; t < 200; ++t) {
        IntSet s = random_subset(160, rng, t);
        if (s.empty()) continue;
        // symmetrize about min+max
        IntSet sym(160);
        const int pivot = s.min() + s.max();
        for (int e : s.elements()) {
            sym.insert(e);
            sym.insert(pivot - e);
        }
        CHECK(is_symmetric(sym));
        CHECK(classify(sym) == Classification::Balanced);
    }
}

TEST_CASE("bit-parallel equals naive double loop (exhaustive n = 12)") {
    for (std::uint64_t mask = 0; mask < 4096; ++mask) {
        IntSet s(12);
        for (int i = 0; i < 12; ++i)
            if ((mask >> i) & 1u) s.insert(i);
        const auto members = s.elements();
        CHECK(sumset(s).size() == static_cast<int>(oracle::naive_sumset(members).size()));
        CHECK(diffset(s).size() == static_cast<int>(oracle::naive_diffset(members).size()));
    }
}

TEST_CASE("bit-parallel equals naive double loop (random subsets of {0..200})") {
    CounterRng rng(7);
    for (std::uint64_t t = 0; t < 300; ++t) check_against_naive(random_subset(201, rng, t));
}

TEST_CASE("small-universe kernels agree with the general path") {
    CounterRng rng(11);
    for (std::uint64_t t = 0; t < 2000; ++t) {
        const int n = 1 + static_cast<int>(rng.at(t, 1000) % 32);
        std::uint32_t mask = 0;
        IntSet s(n);
        for (int e = 0; e < n; ++e)
            if (rng.at(t, e) >> 63) {
                mask |= std::uint32_t{1} << e;
                s.insert(e);
            }
        CHECK(kernel::sumset_size(mask) == sumset(s).size());
        CHECK(kernel::diffset_size(mask) == diffset(s).size());
    }
}

TEST_CASE("diffset symmetry and odd cardinality") {
    CounterRng rng(13);
    for (std::uint64_t t = 0; t < 500; ++t) {
        IntSet s = random_subset(90, rng, t);
        SignedSet d = diffset(s);
        for (int v : d.elements()) CHECK(d.contains(-v));
        if (!s.empty()) CHECK(d.size() % 2 == 1);
    }
}

TEST_CASE("size bounds") {
    CounterRng rng(17);
    for (std::uint64_t t = 0; t < 500; ++t) {
        IntSet s = random_subset(64, rng, t);
        if (s.empty()) continue;
        const int n = s.universe_size();
        const int c = s.size();
        CHECK(sumset(s).size() <= std::min(c * (c + 1) / 2, 2 * n - 1));
        CHECK(diffset(s).size() <= std::min(c * (c - 1) + 1, 2 * n - 1));
    }
}

TEST_CASE("sizes are invariant under translation and dilation") {
    CounterRng rng(19);
    std::mt19937 gen(23);
    std::uniform_int_distribution<int> coeff(1, 7);
    for (std::uint64_t t = 0; t < 200; ++t) {
        IntSet s = random_subset(40, rng, t);
        const int a = coeff(gen), b = coeff(gen);
        IntSet scaled(a + b * 39 + 1);
        for (int e : s.elements()) scaled.insert(a + b * e);
        CHECK(sumset(scaled).size() == sumset(s).size());
        CHECK(diffset(scaled).size() == diffset(s).size());
    }
}

TEST_CASE("canonical rendering") {
    CHECK(IntSet(4, {0, 2, 3}).to_string() == "{0,2,3}");
    CHECK(IntSet(4).to_string() == "{}");
    CHECK(diffset(IntSet(4, {0, 1, 3})).to_string() == "{-3,-2,-1,0,1,2,3}");
}

TEST_CASE("membership validation") {
    IntSet s(4);
    CHECK_THROWS_AS(s.insert(4), std::out_of_range);
    CHECK_THROWS_AS(s.insert(-1), std::out_of_range);
    CHECK_THROWS_AS(IntSet(0), std::invalid_argument);
}
