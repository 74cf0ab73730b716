#include <cmath>

#include "swarmkit/swarm.hpp"

namespace swarmkit::swarm {

namespace {
// Local walk step relative to the mean box width.
constexpr double kLocalWalkScale = 0.01;
}  // namespace

void BatConfig::validate() const {
    if (n < 2) throw ConfigError("n must be >= 2");
    if (!(f_max > f_min)) throw ConfigError("f_max must be greater than f_min");
    if (!(alpha_loud > 0.0 && alpha_loud < 1.0)) throw ConfigError("alpha_loud must be in (0,1)");
    if (!(gamma_rate > 0.0) || !std::isfinite(gamma_rate))
        throw ConfigError("gamma_rate must be > 0");
    if (!(A0 > 0.0) || !std::isfinite(A0)) throw ConfigError("A0 must be > 0");
    if (!(r0 >= 0.0 && r0 <= 1.0)) throw ConfigError("r0 must be in [0,1]");
}

double bat_frequency(double f_min, double f_max, double beta) {
    return f_min + (f_max - f_min) * beta;
}

void bat_velocity(std::span<double> velocity, std::span<const double> x,
                  std::span<const double> best, double frequency, BatSign sign) {
    const double s = sign == BatSign::away_from_best ? 1.0 : -1.0;
    for (std::size_t k = 0; k < velocity.size(); ++k) {
        velocity[k] += s * (x[k] - best[k]) * frequency;
    }
}

double bat_emission_rate(double r0, double gamma, double t) {
    return r0 * (1.0 - std::exp(-gamma * t));
}

Population<BatState> bat_init(const BatConfig& config, Evaluator& evaluator, RngStream& rng) {
    config.validate();
    auto pop = initial_population<BatState>(config.n, evaluator, rng);
    for (auto& bat : pop.agents) {
        bat.aux.velocity.assign(bat.position.size(), 0.0);
        bat.aux.loudness = config.A0;
        bat.aux.emission_rate = bat_emission_rate(config.r0, config.gamma_rate, 0.0);
    }
    return pop;
}

void bat_step(Population<BatState>& pop, Evaluator& evaluator, const BatConfig& config,
              RngStream& rng) {
    const auto& space = evaluator.space();
    const std::size_t dim = space.dimension();
    const double t = static_cast<double>(pop.generation + 1);
    const double walk_sigma = kLocalWalkScale * space.mean_width();

    Vector best_position = pop.best().position;
    double best_fitness = pop.best().fitness;

    Vector candidate(dim);
    for (auto& bat : pop.agents) {
        auto& st = bat.aux;

        st.frequency = bat_frequency(config.f_min, config.f_max, rng.uniform());
        bat_velocity(st.velocity, bat.position, best_position, st.frequency, config.sign);
        for (std::size_t k = 0; k < dim; ++k) candidate[k] = bat.position[k] + st.velocity[k];

        if (rng.uniform() > st.emission_rate) {
            for (std::size_t k = 0; k < dim; ++k) {
                candidate[k] = best_position[k] + walk_sigma * rng.normal();
            }
        }
        clamp_in_place(candidate, space);
        const double f = evaluator(candidate);

        const double accept_draw = rng.uniform();
        if (f < bat.fitness && accept_draw < st.loudness) {
            bat.position = candidate;
            bat.fitness = f;
            st.loudness *= config.alpha_loud;
            st.emission_rate = bat_emission_rate(config.r0, config.gamma_rate, t);
            ++st.accepted;
            if (f < best_fitness) {
                best_fitness = f;
                best_position = bat.position;
            }
        }
    }
    pop.update_best();
    ++pop.generation;
}

}  // namespace swarmkit::swarm
