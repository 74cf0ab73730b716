#include "swarmkit/levy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace swarmkit::levy {

void LevyConfig::validate() const {
    if (!(lambda > 1.0 && lambda < 3.0)) throw ConfigError("lambda must be in (1,3)");
    if (!(scale >= 0.0) || !std::isfinite(scale)) throw ConfigError("levy scale must be >= 0");
}

double mantegna_sigma(double lambda) {
    if (lambda >= 2.0) return 1.0;
    const double num = std::tgamma(1.0 + lambda) * std::sin(std::numbers::pi * lambda / 2.0);
    const double den =
        std::tgamma((1.0 + lambda) / 2.0) * lambda * std::pow(2.0, (lambda - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / lambda);
}

namespace {

double draw(double sigma, double inv_lambda, double scale, RngStream& rng) {
    const double u = rng.normal() * sigma;
    const double v = std::max(std::abs(rng.normal()), std::numeric_limits<double>::min());
    if (scale == 0.0) return 0.0;
    return scale * u / std::pow(v, inv_lambda);
}

}  // namespace

double sample_step(const LevyConfig& config, RngStream& rng) {
    return draw(mantegna_sigma(config.lambda), 1.0 / config.lambda, config.scale, rng);
}

Vector sample_vector(const LevyConfig& config, std::size_t dimension, RngStream& rng) {
    const double sigma = mantegna_sigma(config.lambda);
    const double inv_lambda = 1.0 / config.lambda;
    Vector steps(dimension);
    for (double& s : steps) s = draw(sigma, inv_lambda, config.scale, rng);
    return steps;
}

}  // namespace swarmkit::levy
