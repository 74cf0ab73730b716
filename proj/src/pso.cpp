#include <cmath>

#include "swarmkit/swarm.hpp"

namespace swarmkit::swarm {

void PsoConfig::validate() const {
    if (n < 2) throw ConfigError("n must be >= 2");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be >= 0");
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw ConfigError("beta must be >= 0");
    if (!(inertia >= 0.0 && inertia <= 1.0)) throw ConfigError("inertia must be in [0,1]");
}

void pso_velocity(std::span<double> velocity, std::span<const double> x,
                  std::span<const double> global_best, std::span<const double> personal_best,
                  double alpha, double beta, std::span<const double> eps1,
                  std::span<const double> eps2) {
    for (std::size_t k = 0; k < velocity.size(); ++k) {
        velocity[k] += alpha * eps1[k] * (global_best[k] - x[k]) +
                       beta * eps2[k] * (personal_best[k] - x[k]);
    }
}

Population<PsoState> pso_init(const PsoConfig& config, Evaluator& evaluator, RngStream& rng) {
    config.validate();
    auto pop = initial_population<PsoState>(config.n, evaluator, rng);
    for (auto& agent : pop.agents) {
        agent.aux.velocity.assign(agent.position.size(), 0.0);
        agent.aux.personal_best_position = agent.position;
        agent.aux.personal_best_fitness = agent.fitness;
    }
    return pop;
}

void pso_step(Population<PsoState>& pop, Evaluator& evaluator, const PsoConfig& config,
              RngStream& rng) {
    const auto& space = evaluator.space();
    const std::size_t dim = space.dimension();

    std::size_t leader = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop.agents[i].aux.personal_best_fitness <
            pop.agents[leader].aux.personal_best_fitness)
            leader = i;
    }
    Vector global_best = pop.agents[leader].aux.personal_best_position;
    double global_best_fitness = pop.agents[leader].aux.personal_best_fitness;

    Vector eps1(dim), eps2(dim);
    for (auto& agent : pop.agents) {
        for (double& e : eps1) e = rng.uniform();
        for (double& e : eps2) e = rng.uniform();
        auto& st = agent.aux;
        if (config.inertia != 1.0) {
            for (double& v : st.velocity) v *= config.inertia;
        }
        pso_velocity(st.velocity, agent.position, global_best, st.personal_best_position,
                     config.alpha, config.beta, eps1, eps2);
        for (std::size_t k = 0; k < dim; ++k) agent.position[k] += st.velocity[k];
        clamp_in_place(agent.position, space);
        agent.fitness = evaluator(agent.position);
        if (agent.fitness < st.personal_best_fitness) {
            st.personal_best_fitness = agent.fitness;
            st.personal_best_position = agent.position;
            if (agent.fitness < global_best_fitness) {
                global_best_fitness = agent.fitness;
                global_best = agent.position;
            }
        }
    }
    pop.update_best();
    ++pop.generation;
}

}  // namespace swarmkit::swarm
