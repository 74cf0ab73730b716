#include "swarmkit/rng.hpp"

#include <cmath>
#include <numbers>

namespace swarmkit {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;
}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t RngStream::next_u64() noexcept {
    state_ += kGoldenGamma;
    return mix64(state_);
}

double RngStream::uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * kTwoPow53Inv;
}

double RngStream::uniform(double a, double b) noexcept {
    return a + (b - a) * uniform();
}

std::size_t RngStream::uniform_index(std::size_t n) noexcept {
    // Reject the low 2^64 mod n values so the remainder is exactly uniform.
    const auto bound = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t r = next_u64();
    while (r < threshold) r = next_u64();
    return static_cast<std::size_t>(r % bound);
}

double RngStream::normal() noexcept {
    // 1 - u lies in (0, 1], keeping the logarithm finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::size_t> RngStream::permutation(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = uniform_index(i);
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

}  // namespace swarmkit
