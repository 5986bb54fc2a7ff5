#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sumlab {

enum class Classification { SumDominant, DifferenceDominant, Balanced };

std::string to_string(Classification c);

// A finite set of nonnegative integers below a fixed universe size, stored as
// a packed bitmask. Word layout is internal; the contract is exact set
// semantics. Bits at positions >= universe_size are always zero.
class IntSet {
public:
    explicit IntSet(int universe_size);
    IntSet(int universe_size, std::initializer_list<int> members);
    static IntSet full(int universe_size);

    int universe_size() const { return n_; }
    bool contains(int m) const;
    void insert(int m);   // throws std::out_of_range unless 0 <= m < universe_size
    void erase(int m);
    int size() const;
    bool empty() const;
    int min() const;      // throws std::logic_error on the empty set
    int max() const;
    std::vector<int> elements() const;

    // Canonical rendering: comma-separated ascending members in braces.
    std::string to_string() const;

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const IntSet&, const IntSet&) = default;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

// A set of integers in [-half_width, half_width]; bit i holds value
// i - half_width. Difference sets land here.
class SignedSet {
public:
    explicit SignedSet(int half_width);

    int half_width() const { return h_; }
    bool contains(int d) const;
    void insert(int d);
    int size() const;
    bool empty() const;
    std::vector<int> elements() const;
    std::string to_string() const;

    friend bool operator==(const SignedSet&, const SignedSet&) = default;

private:
    int h_;
    std::vector<std::uint64_t> words_;
};

// S+S over universe {0..2n-2}; bit-parallel OR of the member mask shifted by
// each member.
IntSet sumset(const IntSet& s);

// S-S over {-(n-1)..n-1}; symmetric about 0, contains 0 iff S is nonempty.
SignedSet diffset(const IntSet& s);

Classification classify(const IntSet& s);

struct MissingCounts {
    int missing_sums;    // (2n-1) - |S+S|
    int missing_diffs;   // (2n-1) - |S-S|
};
MissingCounts missing_counts(const IntSet& s);

// True iff S is empty or equal to its reflection about min(S)+max(S).
bool is_symmetric(const IntSet& s);

namespace kernel {

// Raw-mask kernels backing the hot loops. A set mask must have zero bits at
// positions >= n.

inline int words_for(int bits) { return (bits + 63) / 64; }

// Single-word path, n <= 32 (sums then fit 2n-1 <= 63 bits).
std::uint64_t sum_bits(std::uint32_t mask);
std::uint32_t nonneg_diff_bits(std::uint32_t mask);
int sumset_size(std::uint32_t mask);
int diffset_size(std::uint32_t mask);

// Multi-word path. `out` is zeroed by the callee; it must hold 2n-1 bits for
// sums and n bits for nonnegative differences.
void sum_bits(std::span<const std::uint64_t> set, int n, std::span<std::uint64_t> out);
void sum_bits_pair(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, int n,
                   std::span<std::uint64_t> out);
void nonneg_diff_bits(std::span<const std::uint64_t> set, int n, std::span<std::uint64_t> out);
int sumset_size(std::span<const std::uint64_t> set, int n, std::span<std::uint64_t> scratch);
int diffset_size(std::span<const std::uint64_t> set, int n, std::span<std::uint64_t> scratch);

// Bit-reversal of the n-bit universe: bit j of the result is bit n-1-j of in.
void reflect(std::span<const std::uint64_t> in, int n, std::span<std::uint64_t> out);

int popcount(std::span<const std::uint64_t> words);

}  // namespace kernel

}  // namespace sumlab
