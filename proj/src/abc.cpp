#include <cmath>

#include "swarmkit/swarm.hpp"

namespace swarmkit::swarm {

void AbcConfig::validate() const {
    if (n < 2) throw ConfigError("n must be >= 2");
    if (limit && *limit < 1) throw ConfigError("limit must be >= 1");
}

std::size_t AbcConfig::resolved_limit(std::size_t dimension) const {
    return limit.value_or(n * dimension);
}

Vector abc_candidate(std::span<const double> xi, std::span<const double> xj,
                     std::span<const double> phi) {
    Vector v(xi.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = xi[k] + phi[k] * (xi[k] - xj[k]);
    return v;
}

double abc_weight(double fitness) {
    return fitness >= 0.0 ? 1.0 / (1.0 + fitness) : 1.0 + std::abs(fitness);
}

Population<AbcState> abc_init(const AbcConfig& config, Evaluator& evaluator, RngStream& rng) {
    config.validate();
    return initial_population<AbcState>(config.n, evaluator, rng);
}

namespace {

// Perturb source i against a random partner; greedy replacement, ties accepted.
void forage(Population<AbcState>& pop, std::size_t i, Evaluator& evaluator, RngStream& rng,
            Vector& phi) {
    const std::size_t n = pop.size();
    std::size_t j = rng.uniform_index(n - 1);
    if (j >= i) ++j;
    for (double& p : phi) p = rng.uniform(-1.0, 1.0);

    auto& source = pop.agents[i];
    Vector candidate = abc_candidate(source.position, pop.agents[j].position, phi);
    clamp_in_place(candidate, evaluator.space());
    const double f = evaluator(candidate);
    if (f <= source.fitness) {
        source.position = std::move(candidate);
        source.fitness = f;
        source.aux.trials = 0;
    } else {
        ++source.aux.trials;
    }
}

std::size_t roulette(std::span<const double> weights, double total, RngStream& rng) {
    const double r = rng.uniform() * total;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        cumulative += weights[i];
        if (r < cumulative) return i;
    }
    return weights.size() - 1;
}

}  // namespace

void abc_step(Population<AbcState>& pop, Evaluator& evaluator, const AbcConfig& config,
              RngStream& rng) {
    const auto& space = evaluator.space();
    const std::size_t n = pop.size();
    Vector phi(space.dimension());

    for (std::size_t i = 0; i < n; ++i) forage(pop, i, evaluator, rng, phi);

    Vector weights(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        weights[i] = abc_weight(pop.agents[i].fitness);
        total += weights[i];
    }
    for (std::size_t picked = 0; picked < n; ++picked) {
        forage(pop, roulette(weights, total, rng), evaluator, rng, phi);
    }

    const std::size_t limit = config.resolved_limit(space.dimension());
    for (auto& source : pop.agents) {
        if (source.aux.trials > limit) {
            source.position = random_position(space, rng);
            source.fitness = evaluator(source.position);
            source.aux.trials = 0;
        }
    }
    pop.update_best();
    ++pop.generation;
}

}  // namespace swarmkit::swarm
