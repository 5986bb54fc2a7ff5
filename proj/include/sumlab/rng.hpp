#pragma once

#include <cstdint>

namespace sumlab {

// Counter-based random stream: every draw is a stateless hash of
// (seed, trial, index), so any parallel schedule over trials produces
// identical output. The mixer is the splitmix64 finalizer.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    std::uint64_t at(std::uint64_t trial, std::uint64_t index) const {
        std::uint64_t z = seed_;
        z = mix(z ^ ((trial + 1) * 0xd1b54a32d192ed03ull));
        z = mix(z ^ ((index + 1) * 0x8cb92ba72f3d8dd7ull));
        return z;
    }

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

private:
    std::uint64_t seed_;
};

}  // namespace sumlab
