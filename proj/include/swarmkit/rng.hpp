#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace swarmkit {

/// Seeded random stream with a fixed, platform-independent draw sequence.
///
/// The generator is SplitMix64: a 64-bit Weyl counter advanced by the
/// golden-ratio increment 0x9E3779B97F4A7C15 and passed through a fixed
/// xor-shift-multiply finalizer. Every derived draw is computed here rather
/// than through <random> distributions, whose algorithms are
/// implementation-defined.
///
/// Draw accounting (each bullet is the number of raw 64-bit draws consumed):
///   - uniform(), uniform(a, b): 1
///   - normal(): 2 (Box-Muller, cosine branch, no cached spare)
///   - uniform_index(n): 1 or more (modulo with rejection of the biased low range)
///   - permutation(n): one uniform_index per position, Fisher-Yates from the back
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) noexcept : seed_(seed), state_(seed) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept;

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform() noexcept;
    /// Uniform real in [a, b).
    double uniform(double a, double b) noexcept;
    /// Uniform integer in [0, n). Requires n > 0.
    std::size_t uniform_index(std::size_t n) noexcept;
    /// Standard normal variate.
    double normal() noexcept;
    /// Uniformly random permutation of 0..n-1.
    std::vector<std::size_t> permutation(std::size_t n);

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

/// SplitMix64 finalizer; a bijective 64-bit mixing function.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// 64-bit FNV-1a hash of a byte string.
std::uint64_t fnv1a64(std::string_view text) noexcept;

}  // namespace swarmkit
