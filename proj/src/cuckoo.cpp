#include <cmath>

#include "swarmkit/levy.hpp"
#include "swarmkit/swarm.hpp"

namespace swarmkit::swarm {

void CuckooConfig::validate() const {
    if (n < 2) throw ConfigError("n must be >= 2");
    if (!(pa >= 0.0 && pa <= 1.0)) throw ConfigError("pa must be in [0,1]");
    if (!(alpha_step > 0.0) || !std::isfinite(alpha_step))
        throw ConfigError("alpha_step must be > 0");
    if (!(lambda > 1.0 && lambda < 3.0)) throw ConfigError("lambda must be in (1,3)");
    if (!(alpha_local >= 0.0) || !std::isfinite(alpha_local))
        throw ConfigError("alpha_local must be >= 0");
}

bool cuckoo_gate(double pa, double eps) { return pa - eps > 0.0; }

Vector cuckoo_local_move(std::span<const double> x, std::span<const double> xj,
                         std::span<const double> xk, double alpha_local, double s,
                         std::span<const double> eps, double pa) {
    Vector moved(x.begin(), x.end());
    for (std::size_t k = 0; k < moved.size(); ++k) {
        if (cuckoo_gate(pa, eps[k])) moved[k] += alpha_local * s * (xj[k] - xk[k]);
    }
    return moved;
}

Population<> cuckoo_init(const CuckooConfig& config, Evaluator& evaluator, RngStream& rng) {
    config.validate();
    return initial_population(config.n, evaluator, rng);
}

void cuckoo_step(Population<>& pop, Evaluator& evaluator, const CuckooConfig& config,
                 RngStream& rng) {
    const auto& space = evaluator.space();
    const std::size_t dim = space.dimension();
    const std::size_t n = pop.size();
    const levy::LevyConfig flight{config.lambda, config.alpha_step};

    // Global phase: a Levy flight from each nest challenges a random nest.
    for (std::size_t i = 0; i < n; ++i) {
        Vector egg = pop.agents[i].position;
        const Vector step = levy::sample_vector(flight, dim, rng);
        for (std::size_t k = 0; k < dim; ++k) egg[k] += step[k];
        clamp_in_place(egg, space);
        const double f = evaluator(egg);
        auto& host = pop.agents[rng.uniform_index(n)];
        if (f < host.fitness) {
            host.position = std::move(egg);
            host.fitness = f;
        }
    }

    // Local phase: discovered coordinates move along the difference of two
    // randomly paired nests.
    const auto pick_j = rng.permutation(n);
    const auto pick_k = rng.permutation(n);
    const auto snapshot = pop.agents;
    Vector eps(dim);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = rng.uniform();
        for (double& e : eps) e = rng.uniform();
        auto& nest = pop.agents[i];
        Vector moved = cuckoo_local_move(nest.position, snapshot[pick_j[i]].position,
                                         snapshot[pick_k[i]].position, config.alpha_local, s,
                                         eps, config.pa);
        clamp_in_place(moved, space);
        const double f = evaluator(moved);
        if (f < nest.fitness) {
            nest.position = std::move(moved);
            nest.fitness = f;
        }
    }
    pop.update_best();
    ++pop.generation;
}

}  // namespace swarmkit::swarm
