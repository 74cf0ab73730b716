#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "swarmkit/levy.hpp"

using namespace swarmkit;

namespace {

// Hill estimator of the tail index over the k largest magnitudes.
double hill(std::vector<double> mags, std::size_t k) {
    std::nth_element(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(k), mags.end(),
                     std::greater<>());
    const double threshold = mags[k];
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += std::log(mags[i] / threshold);
    return static_cast<double>(k) / s;
}

std::vector<double> draw(const levy::LevyConfig& cfg, std::size_t n, std::uint64_t seed) {
    RngStream rng(seed);
    std::vector<double> out(n);
    for (double& x : out) x = levy::sample_step(cfg, rng);
    return out;
}

double median_abs(std::vector<double> xs) {
    for (double& x : xs) x = std::abs(x);
    const auto mid = xs.begin() + static_cast<std::ptrdiff_t>(xs.size() / 2);
    std::nth_element(xs.begin(), mid, xs.end());
    return *mid;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS((levy::LevyConfig{1.0, 1.0}.validate()), ConfigError);
    CHECK_THROWS_AS((levy::LevyConfig{3.0, 1.0}.validate()), ConfigError);
    CHECK_THROWS_AS((levy::LevyConfig{1.5, -1.0}.validate()), ConfigError);
    CHECK_NOTHROW((levy::LevyConfig{2.5, 0.0}.validate()));
}

TEST_CASE("mantegna sigma") {
    // lambda = 1.5: Gamma(2.5) sin(0.75 pi) / (Gamma(1.25) * 1.5 * 2^0.25), to the 1/1.5.
    const double num = std::tgamma(2.5) * std::sin(0.75 * std::numbers::pi);
    const double den = std::tgamma(1.25) * 1.5 * std::pow(2.0, 0.25);
    CHECK(levy::mantegna_sigma(1.5) == doctest::Approx(std::pow(num / den, 1.0 / 1.5)));
    CHECK(levy::mantegna_sigma(1.5) == doctest::Approx(0.6966).epsilon(1e-3));
    CHECK(levy::mantegna_sigma(2.5) == 1.0);
}

TEST_CASE("step is the documented quotient of two normals") {
    const levy::LevyConfig cfg{1.5, 0.3};
    RngStream a(17), b(17);
    const double step = levy::sample_step(cfg, a);
    const double u = b.normal();
    const double v = b.normal();
    const double expected = 0.3 * levy::mantegna_sigma(1.5) * u / std::pow(std::abs(v), 1.0 / 1.5);
    CHECK(step == doctest::Approx(expected).epsilon(1e-15));
    CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("zero scale gives zero steps") {
    RngStream rng(1);
    for (double x : levy::sample_vector({1.5, 0.0}, 50, rng)) CHECK(x == 0.0);
}

TEST_CASE("vector draws match repeated scalar draws") {
    const levy::LevyConfig cfg{1.7, 1.0};
    RngStream a(23), b(23);
    const Vector v = levy::sample_vector(cfg, 6, a);
    for (double x : v) CHECK(x == levy::sample_step(cfg, b));
    RngStream c(23), d(23);
    CHECK(levy::sample_vector(cfg, 1, c)[0] == levy::sample_step(cfg, d));
}

TEST_CASE("tail index and symmetry") {
    for (const double lambda : {1.3, 1.5, 1.8, 2.5}) {
        CAPTURE(lambda);
        const auto xs = draw({lambda, 1.0}, 400000, 99);
        std::vector<double> mags(xs.size());
        std::size_t positive = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mags[i] = std::abs(xs[i]);
            positive += xs[i] > 0.0;
        }
        const double h = hill(mags, mags.size() / 100);
        CHECK(h == doctest::Approx(lambda).epsilon(0.15));
        const double frac = static_cast<double>(positive) / static_cast<double>(xs.size());
        CHECK(frac > 0.49);
        CHECK(frac < 0.51);
    }
}

TEST_CASE("tail dominates a normal with the same median magnitude") {
    const auto xs = draw({1.5, 1.0}, 200000, 5);
    const double m = median_abs(xs);
    // |N(0, s^2)| has median 0.6745 s.
    const double s = m / 0.6744897501960817;
    const double cut = 5.0 * s;
    std::size_t beyond = 0;
    for (double x : xs) beyond += std::abs(x) > cut;
    // Normal: P(|Z| > 5) = 5.7e-7, i.e. about 0.1 expected here.
    CHECK(beyond > 1000);
}

TEST_CASE("second moment is carried by a few extreme steps") {
    auto xs = draw({1.5, 1.0}, 1000000, 7);
    for (double& x : xs) x = x * x;
    std::sort(xs.begin(), xs.end(), std::greater<>());
    double total = 0.0, top = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        total += xs[i];
        if (i < xs.size() / 1000) top += xs[i];
    }
    // For a normal sample the top 0.1% of squares hold about 1.3% of the sum.
    CHECK(top / total > 0.5);
}
