#include <cmath>

#include "swarmkit/swarm.hpp"

namespace swarmkit::swarm {

void FireflyConfig::validate() const {
    if (n < 2) throw ConfigError("n must be >= 2");
    if (!(beta0 > 0.0) || !std::isfinite(beta0)) throw ConfigError("beta0 must be > 0");
    if (gamma && (!(*gamma >= 0.0) || !std::isfinite(*gamma)))
        throw ConfigError("gamma must be >= 0");
    if (!(alpha0 >= 0.0) || !std::isfinite(alpha0)) throw ConfigError("alpha0 must be >= 0");
    if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must be in (0,1)");
}

double firefly_alpha(double alpha0, double delta, std::size_t t) {
    return alpha0 * std::pow(delta, static_cast<double>(t));
}

Vector firefly_move(std::span<const double> xi, std::span<const double> xj, double beta0,
                    double gamma, double alpha_t, std::span<const double> eps) {
    double r2 = 0.0;
    for (std::size_t k = 0; k < xi.size(); ++k) {
        const double d = xj[k] - xi[k];
        r2 += d * d;
    }
    const double attraction = beta0 * std::exp(-gamma * r2);
    Vector moved(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k) {
        moved[k] = xi[k] + attraction * (xj[k] - xi[k]) + alpha_t * eps[k];
    }
    return moved;
}

double default_gamma(const SearchSpace& space) {
    const double width = space.mean_width();
    if (!(width > 0.0) || !std::isfinite(width)) return 1.0;
    return 1.0 / (width * width);
}

Population<> firefly_init(const FireflyConfig& config, Evaluator& evaluator, RngStream& rng) {
    config.validate();
    return initial_population(config.n, evaluator, rng);
}

void firefly_step(Population<>& pop, Evaluator& evaluator, const FireflyConfig& config,
                  std::size_t t, RngStream& rng) {
    const auto& space = evaluator.space();
    const double gamma = config.gamma.value_or(default_gamma(space));
    const double alpha_t = firefly_alpha(config.alpha0, config.delta, t);
    Vector eps(space.dimension());

    const std::size_t n = pop.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto& fi = pop.agents[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const auto& fj = pop.agents[j];
            if (!(fj.fitness < fi.fitness)) continue;
            for (double& e : eps) e = rng.normal();
            Vector moved = firefly_move(fi.position, fj.position, config.beta0, gamma, alpha_t, eps);
            clamp_in_place(moved, space);
            const double f = evaluator(moved);
            if (f < fi.fitness) {
                fi.position = std::move(moved);
                fi.fitness = f;
            }
        }
    }
    pop.update_best();
    ++pop.generation;
}

}  // namespace swarmkit::swarm
