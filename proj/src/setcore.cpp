#include "sumlab/setcore.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace sumlab {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::SumDominant: return "sum-dominant";
        case Classification::DifferenceDominant: return "difference-dominant";
        case Classification::Balanced: return "balanced";
    }
    return "?";
}

IntSet::IntSet(int universe_size) : n_(universe_size) {
    if (universe_size < 1) throw std::invalid_argument("IntSet universe_size must be positive");
    words_.assign(kernel::words_for(n_), 0);
}

IntSet::IntSet(int universe_size, std::initializer_list<int> members) : IntSet(universe_size) {
    for (int m : members) insert(m);
}

IntSet IntSet::full(int universe_size) {
    IntSet s(universe_size);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
    const int tail = universe_size % 64;
    if (tail != 0) s.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return s;
}

bool IntSet::contains(int m) const {
    if (m < 0 || m >= n_) return false;
    return (words_[m / 64] >> (m % 64)) & 1u;
}

void IntSet::insert(int m) {
    if (m < 0 || m >= n_) throw std::out_of_range("IntSet member out of universe range");
    words_[m / 64] |= std::uint64_t{1} << (m % 64);
}

void IntSet::erase(int m) {
    if (m < 0 || m >= n_) throw std::out_of_range("IntSet member out of universe range");
    words_[m / 64] &= ~(std::uint64_t{1} << (m % 64));
}

int IntSet::size() const { return kernel::popcount(words_); }

bool IntSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

int IntSet::min() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    throw std::logic_error("min() of empty IntSet");
}

int IntSet::max() const {
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(words_[i]));
    throw std::logic_error("max() of empty IntSet");
}

std::vector<int> IntSet::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i)
        for (std::uint64_t w = words_[i]; w; w &= w - 1)
            out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
    return out;
}

std::string IntSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int m : elements()) {
        if (!first) os << ',';
        os << m;
        first = false;
    }
    os << '}';
    return os.str();
}

SignedSet::SignedSet(int half_width) : h_(half_width) {
    if (half_width < 0) throw std::invalid_argument("SignedSet half_width must be nonnegative");
    words_.assign(kernel::words_for(2 * h_ + 1), 0);
}

bool SignedSet::contains(int d) const {
    if (d < -h_ || d > h_) return false;
    const int i = d + h_;
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void SignedSet::insert(int d) {
    if (d < -h_ || d > h_) throw std::out_of_range("SignedSet member out of range");
    const int i = d + h_;
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

int SignedSet::size() const { return kernel::popcount(words_); }

bool SignedSet::empty() const { return size() == 0; }

std::vector<int> SignedSet::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i)
        for (std::uint64_t w = words_[i]; w; w &= w - 1)
            out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)) - h_);
    return out;
}

std::string SignedSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int m : elements()) {
        if (!first) os << ',';
        os << m;
        first = false;
    }
    os << '}';
    return os.str();
}

IntSet sumset(const IntSet& s) {
    const int n = s.universe_size();
    std::vector<std::uint64_t> buf(kernel::words_for(2 * n - 1));
    kernel::sum_bits(s.words(), n, buf);
    IntSet result(2 * n - 1);
    for (int b = 0; b < 2 * n - 1; ++b)
        if ((buf[b / 64] >> (b % 64)) & 1u) result.insert(b);
    return result;
}

SignedSet diffset(const IntSet& s) {
    const int n = s.universe_size();
    SignedSet out(n - 1);
    std::vector<std::uint64_t> buf(kernel::words_for(n));
    kernel::nonneg_diff_bits(s.words(), n, buf);
    for (int d = 0; d < n; ++d) {
        if ((buf[d / 64] >> (d % 64)) & 1u) {
            out.insert(d);
            out.insert(-d);
        }
    }
    return out;
}

Classification classify(const IntSet& s) {
    const int n = s.universe_size();
    std::vector<std::uint64_t> scratch(kernel::words_for(2 * n - 1));
    const int sums = kernel::sumset_size(s.words(), n, scratch);
    const int diffs = kernel::diffset_size(s.words(), n, scratch);
    if (sums > diffs) return Classification::SumDominant;
    if (diffs > sums) return Classification::DifferenceDominant;
    return Classification::Balanced;
}

MissingCounts missing_counts(const IntSet& s) {
    const int n = s.universe_size();
    std::vector<std::uint64_t> scratch(kernel::words_for(2 * n - 1));
    const int sums = kernel::sumset_size(s.words(), n, scratch);
    const int diffs = kernel::diffset_size(s.words(), n, scratch);
    return {(2 * n - 1) - sums, (2 * n - 1) - diffs};
}

bool is_symmetric(const IntSet& s) {
    if (s.empty()) return true;
    const int pivot = s.min() + s.max();
    for (int m : s.elements())
        if (!s.contains(pivot - m)) return false;
    return true;
}

namespace kernel {

std::uint64_t sum_bits(std::uint32_t mask) {
    std::uint64_t out = 0;
    for (std::uint32_t t = mask; t; t &= t - 1)
        out |= std::uint64_t{mask} << std::countr_zero(t);
    return out;
}

std::uint32_t nonneg_diff_bits(std::uint32_t mask) {
    std::uint32_t out = 0;
    for (std::uint32_t t = mask; t; t &= t - 1)
        out |= mask >> std::countr_zero(t);
    return out;
}

int sumset_size(std::uint32_t mask) { return std::popcount(sum_bits(mask)); }

int diffset_size(std::uint32_t mask) {
    if (mask == 0) return 0;
    return 2 * std::popcount(nonneg_diff_bits(mask)) - 1;
}

namespace {

// dst |= src << shift, dropping word writes past dst (those bits are zero for
// in-range inputs).
void or_shifted_left(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, int shift) {
    const std::size_t ws = static_cast<std::size_t>(shift) / 64;
    const int bs = shift % 64;
    if (bs == 0) {
        for (std::size_t i = src.size(); i-- > 0;)
            if (i + ws < dst.size()) dst[i + ws] |= src[i];
    } else {
        for (std::size_t i = src.size(); i-- > 0;) {
            if (i + ws + 1 < dst.size()) dst[i + ws + 1] |= src[i] >> (64 - bs);
            if (i + ws < dst.size()) dst[i + ws] |= src[i] << bs;
        }
    }
}

// dst |= src >> shift.
void or_shifted_right(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, int shift) {
    const std::size_t ws = static_cast<std::size_t>(shift) / 64;
    const int bs = shift % 64;
    for (std::size_t i = 0; i + ws < src.size(); ++i) {
        std::uint64_t v = src[i + ws] >> bs;
        if (bs != 0 && i + ws + 1 < src.size()) v |= src[i + ws + 1] << (64 - bs);
        if (i < dst.size()) dst[i] |= v;
    }
}

template <typename Fn>
void for_each_member(std::span<const std::uint64_t> set, Fn&& fn) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::uint64_t w = set[i]; w; w &= w - 1)
            fn(static_cast<int>(i * 64 + std::countr_zero(w)));
}

}  // namespace

void sum_bits(std::span<const std::uint64_t> set, int n, std::span<std::uint64_t> out) {
    sum_bits_pair(set, set, n, out);
}

void sum_bits_pair(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, int n,
                   std::span<std::uint64_t> out) {
    (void)n;
    std::fill(out.begin(), out.end(), 0);
    for_each_member(a, [&](int s) { or_shifted_left(out, b, s); });
}

void nonneg_diff_bits(std::span<const std::uint64_t> set, int n, std::span<std::uint64_t> out) {
    (void)n;
    std::fill(out.begin(), out.end(), 0);
    for_each_member(set, [&](int s) { or_shifted_right(out, set, s); });
}

int sumset_size(std::span<const std::uint64_t> set, int n, std::span<std::uint64_t> scratch) {
    auto out = scratch.subspan(0, words_for(2 * n - 1));
    sum_bits(set, n, out);
    return popcount(out);
}

int diffset_size(std::span<const std::uint64_t> set, int n, std::span<std::uint64_t> scratch) {
    auto out = scratch.subspan(0, words_for(n));
    nonneg_diff_bits(set, n, out);
    const int pos = popcount(out);
    return pos == 0 ? 0 : 2 * pos - 1;
}

void reflect(std::span<const std::uint64_t> in, int n, std::span<std::uint64_t> out) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < in.size(); ++i) {
        for (std::uint64_t w = in[i]; w; w &= w - 1) {
            const int j = n - 1 - static_cast<int>(i * 64 + std::countr_zero(w));
            out[j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
}

int popcount(std::span<const std::uint64_t> words) {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
}

}  // namespace kernel

}  // namespace sumlab
