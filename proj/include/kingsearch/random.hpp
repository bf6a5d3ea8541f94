#pragma once

// Portable seeded generation. Everything here is bit-exact across
// platforms and implementation languages: no std:: distributions.

#include <kingsearch/core.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace kingsearch {

/// SplitMix64 finaliser applied to x + 0x9e3779b97f4a7c15.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Sequential SplitMix64 stream: the i-th draw is splitmix64(seed + i * gamma).
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t operator()() noexcept {
        const std::uint64_t out = splitmix64(state_);
        state_ += 0x9e3779b97f4a7c15ULL;
        return out;
    }

    /// Uniform in [0, bound) by rejection. bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t r;
        do {
            r = (*this)();
        } while (r >= limit);
        return r % bound;
    }

    static constexpr std::uint64_t min() noexcept { return 0; }
    static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

private:
    std::uint64_t state_;
};

/// Pair k (lexicographic) is oriented u -> v iff the low bit of
/// splitmix64(seed + k) is set.
inline Tournament generate_random_tournament(std::size_t n, std::uint64_t seed) {
    std::uint64_t k = 0;
    return Tournament::from_orientation(n, [&](std::size_t, std::size_t) { return (splitmix64(seed + k++) & 1U) != 0; });
}

/// Seed used for trial t of an experiment started from `seed`.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) noexcept { return seed + t * 0x9e3779b97f4a7c15ULL; }

/// Fisher-Yates shuffle driven by SplitMix64.
template <class T>
void portable_shuffle(std::vector<T>& items, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace kingsearch
