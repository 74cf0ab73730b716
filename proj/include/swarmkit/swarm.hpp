#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "swarmkit/core.hpp"
#include "swarmkit/rng.hpp"

namespace swarmkit::swarm {

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

/// Particle swarm: v <- w v + alpha e1 (g* - x) + beta e2 (x_i* - x), x <- x + v.
/// No velocity clamp.
///
/// The default w = 1 is the classic unweighted update. With w = 1 the
/// per-particle recurrence is undamped and the swarm does not settle; use
/// w < 1 (0.7298 is the usual choice) for convergent behaviour.
struct PsoConfig {
    std::size_t n = 30;
    double alpha = 1.0;    // pull toward the swarm best g*
    double beta = 1.0;     // pull toward the particle's own best x_i*
    double inertia = 1.0;  // w, in [0, 1]

    void validate() const;
};

struct PsoState {
    Vector velocity;
    Vector personal_best_position;
    double personal_best_fitness = 0.0;
};

/// Artificial bee colony. `limit` unset means n * dimension.
struct AbcConfig {
    std::size_t n = 25;
    std::optional<std::size_t> limit;

    void validate() const;
    [[nodiscard]] std::size_t resolved_limit(std::size_t dimension) const;
};

struct AbcState {
    std::size_t trials = 0;
};

enum class BatSign {
    away_from_best,  // v <- v + (x - x*) f
    toward_best,     // v <- v + (x* - x) f
};

struct BatConfig {
    std::size_t n = 30;
    double f_min = 0.0;
    double f_max = 2.0;
    double alpha_loud = 0.9;  // loudness decay, (0,1)
    double gamma_rate = 0.9;  // emission-rate growth, > 0
    double A0 = 1.0;          // initial loudness, > 0
    double r0 = 0.5;          // asymptotic emission rate, [0,1]
    BatSign sign = BatSign::away_from_best;

    void validate() const;
};

struct BatState {
    Vector velocity;
    double frequency = 0.0;
    double loudness = 0.0;
    double emission_rate = 0.0;
    std::size_t accepted = 0;
};

struct FireflyConfig {
    std::size_t n = 25;
    double beta0 = 1.0;
    std::optional<double> gamma;  // unset: default_gamma(space)
    double alpha0 = 0.5;
    double delta = 0.97;

    void validate() const;
};

struct CuckooConfig {
    std::size_t n = 25;
    double pa = 0.25;
    double alpha_step = 0.5;   // Levy flight scale
    double lambda = 1.5;       // Levy tail exponent
    double alpha_local = 1.0;  // scale of the pairwise local move

    void validate() const;
};

using AlgorithmConfig = std::variant<PsoConfig, AbcConfig, BatConfig, FireflyConfig, CuckooConfig>;

/// Registry name: "pso", "abc", "bat", "firefly" or "cuckoo".
std::string_view algorithm_name(const AlgorithmConfig& config);
void validate(const AlgorithmConfig& config);

// ---------------------------------------------------------------------------
// Update kernels (no randomness; draws are passed in)
// ---------------------------------------------------------------------------

/// In-place PSO velocity update with per-coordinate draws eps1, eps2.
void pso_velocity(std::span<double> velocity, std::span<const double> x,
                  std::span<const double> global_best, std::span<const double> personal_best,
                  double alpha, double beta, std::span<const double> eps1,
                  std::span<const double> eps2);

/// v_k = x_i,k + phi_k (x_i,k - x_j,k).
Vector abc_candidate(std::span<const double> xi, std::span<const double> xj,
                     std::span<const double> phi);

/// Positive roulette weight for a minimization fitness.
double abc_weight(double fitness);

double bat_frequency(double f_min, double f_max, double beta);

void bat_velocity(std::span<double> velocity, std::span<const double> x,
                  std::span<const double> best, double frequency, BatSign sign);

/// r0 (1 - exp(-gamma t)).
double bat_emission_rate(double r0, double gamma, double t);

/// alpha0 * delta^t.
double firefly_alpha(double alpha0, double delta, std::size_t t);

/// x_i + beta0 exp(-gamma r^2) (x_j - x_i) + alpha_t eps (unclamped).
Vector firefly_move(std::span<const double> xi, std::span<const double> xj, double beta0,
                    double gamma, double alpha_t, std::span<const double> eps);

/// 1/L^2 with L the mean box width; 1 when that is not finite and positive.
double default_gamma(const SearchSpace& space);

/// Unit step H(pa - eps), with H(0) = 0.
bool cuckoo_gate(double pa, double eps);

/// x + alpha s H(pa - eps_k) (x_j - x_k), per coordinate (unclamped).
Vector cuckoo_local_move(std::span<const double> x, std::span<const double> xj,
                         std::span<const double> xk, double alpha_local, double s,
                         std::span<const double> eps, double pa);

// ---------------------------------------------------------------------------
// Population setup and steps
// ---------------------------------------------------------------------------
//
// Every step evaluates each candidate immediately after it is formed,
// consumes random draws in the order documented on the function, clamps
// positions into the box, and leaves population.best_index on the current
// argmin and population.generation incremented.

Population<PsoState> pso_init(const PsoConfig& config, Evaluator& evaluator, RngStream& rng);

/// For each particle in index order: D draws eps1, then D draws eps2.
/// The swarm best is refreshed as soon as any personal best improves on it.
void pso_step(Population<PsoState>& pop, Evaluator& evaluator, const PsoConfig& config,
              RngStream& rng);

Population<AbcState> abc_init(const AbcConfig& config, Evaluator& evaluator, RngStream& rng);

/// Employed phase (per source: partner index, then D draws of phi),
/// onlooker phase (n roulette picks, each followed by a partner and D draws),
/// scout phase (each source whose trials exceed the limit gets a fresh
/// uniform position, in index order).
void abc_step(Population<AbcState>& pop, Evaluator& evaluator, const AbcConfig& config,
              RngStream& rng);

Population<BatState> bat_init(const BatConfig& config, Evaluator& evaluator, RngStream& rng);

/// Per bat: beta, local-walk draw, [D normals for the walk], acceptance draw.
/// The schedule time t is the 1-based index of the iteration being run.
void bat_step(Population<BatState>& pop, Evaluator& evaluator, const BatConfig& config,
              RngStream& rng);

Population<> firefly_init(const FireflyConfig& config, Evaluator& evaluator, RngStream& rng);

/// Pairwise sweep: D normals per move. `t` is the number of completed
/// iterations (alpha_t = alpha0 delta^t).
void firefly_step(Population<>& pop, Evaluator& evaluator, const FireflyConfig& config,
                  std::size_t t, RngStream& rng);

Population<> cuckoo_init(const CuckooConfig& config, Evaluator& evaluator, RngStream& rng);

/// Global phase per nest: D Levy steps, then the index of the nest to
/// challenge. Local phase: two permutations, then per nest one draw of s
/// followed by D gate draws.
void cuckoo_step(Population<>& pop, Evaluator& evaluator, const CuckooConfig& config,
                 RngStream& rng);

// ---------------------------------------------------------------------------
// Run loop
// ---------------------------------------------------------------------------

/// Seeded run: uniform initialization, then steps until the first exhausted
/// budget bound. The trace records the best fitness seen so far after each
/// iteration.
RunResult run(const AlgorithmConfig& config, const Problem& problem, const Budget& budget,
              std::uint64_t seed);

}  // namespace swarmkit::swarm
