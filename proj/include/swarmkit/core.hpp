#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmkit/rng.hpp"

namespace swarmkit {

using Vector = std::vector<double>;

/// Raised for invalid configurations: bad ranges, empty budgets, unknown names.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an objective returns NaN or infinity.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(Vector position, double raw_value);

    [[nodiscard]] const Vector& position() const noexcept { return position_; }
    [[nodiscard]] double raw_value() const noexcept { return raw_value_; }

private:
    Vector position_;
    double raw_value_;
};

/// Axis-aligned feasible box. Invariant: dimension() >= 1, lower[k] < upper[k].
class SearchSpace {
public:
    SearchSpace(Vector lower, Vector upper);

    /// The cube [lo, hi]^dimension.
    static SearchSpace cube(std::size_t dimension, double lo, double hi);

    [[nodiscard]] std::size_t dimension() const noexcept { return lower_.size(); }
    [[nodiscard]] const Vector& lower() const noexcept { return lower_; }
    [[nodiscard]] const Vector& upper() const noexcept { return upper_; }
    [[nodiscard]] double width(std::size_t k) const { return upper_[k] - lower_[k]; }
    [[nodiscard]] double mean_width() const noexcept;
    [[nodiscard]] bool contains(std::span<const double> x) const noexcept;

private:
    Vector lower_;
    Vector upper_;
};

/// Clamp each coordinate into [lower[k], upper[k]]. Idempotent.
Vector clamp_to_bounds(Vector position, const SearchSpace& space);
void clamp_in_place(std::span<double> position, const SearchSpace& space);

/// Map unit draws r[k] in [0,1] to L_k + r[k] (U_k - L_k).
Vector point_from_unit(const SearchSpace& space, std::span<const double> r);

/// Uniform point in the box; consumes exactly dimension() uniform draws.
Vector random_position(const SearchSpace& space, RngStream& rng);

using Objective = std::function<double(std::span<const double>)>;
using GradientFn = std::function<Vector(std::span<const double>)>;

struct KnownOptimum {
    Vector position;
    double fitness = 0.0;
};

/// A minimization problem over a box. Objectives must be safe to call
/// concurrently from independent runs.
struct Problem {
    std::string name;
    SearchSpace space;
    Objective objective;
    std::optional<KnownOptimum> known_optimum;
    GradientFn gradient;  // empty when no analytic gradient is registered
};

/// Evaluate the objective, incrementing `counter`. Throws EvaluationError on
/// a non-finite result.
double evaluate(const Problem& problem, std::span<const double> position, std::size_t& counter);

/// Counting front-end over a problem, owned by a single run.
class Evaluator {
public:
    explicit Evaluator(const Problem& problem) : problem_(&problem) {}

    double operator()(std::span<const double> position) {
        return evaluate(*problem_, position, count_);
    }

    [[nodiscard]] const Problem& problem() const noexcept { return *problem_; }
    [[nodiscard]] const SearchSpace& space() const noexcept { return problem_->space; }
    [[nodiscard]] std::size_t count() const noexcept { return count_; }

private:
    const Problem* problem_;
    std::size_t count_ = 0;
};

struct NoAux {};

template <class Aux = NoAux>
struct Agent {
    Vector position;
    double fitness = std::numeric_limits<double>::infinity();
    Aux aux{};
};

/// Index of the minimum fitness; ties resolve to the lowest index.
std::size_t argmin(std::span<const double> fitness);

template <class Aux = NoAux>
struct Population {
    std::vector<Agent<Aux>> agents;
    std::size_t best_index = 0;
    std::size_t generation = 0;

    [[nodiscard]] std::size_t size() const noexcept { return agents.size(); }
    [[nodiscard]] const Agent<Aux>& best() const { return agents[best_index]; }

    /// Re-point best_index at the minimal-fitness agent (lowest index on
    /// ties). Returns true when the index changed.
    bool update_best() {
        std::size_t best = 0;
        for (std::size_t i = 1; i < agents.size(); ++i) {
            if (agents[i].fitness < agents[best].fitness) best = i;
        }
        const bool changed = best != best_index;
        best_index = best;
        return changed;
    }
};

/// n agents at uniform random positions, evaluated in index order.
template <class Aux = NoAux>
Population<Aux> initial_population(std::size_t n, Evaluator& evaluator, RngStream& rng) {
    Population<Aux> pop;
    pop.agents.resize(n);
    for (auto& agent : pop.agents) {
        agent.position = random_position(evaluator.space(), rng);
        agent.fitness = evaluator(agent.position);
    }
    pop.update_best();
    return pop;
}

/// Stopping rule for a run. At least one bound must be set. The evaluation
/// bound is checked between iterations, so the iteration in progress completes.
struct Budget {
    std::optional<std::size_t> max_iterations;
    std::optional<std::size_t> max_evaluations;

    void validate() const;
};

struct RunResult {
    Vector best_position;
    double best_fitness = std::numeric_limits<double>::infinity();
    std::vector<double> trace;  // incumbent best after each iteration
    std::size_t evaluations = 0;
    std::uint64_t seed = 0;
    double wall_time = 0.0;  // seconds
    std::vector<std::size_t> best_tour;  // discrete problems only

    [[nodiscard]] std::size_t iterations() const noexcept { return trace.size(); }
};

/// Bitwise equality on everything except wall time.
bool same_outcome(const RunResult& a, const RunResult& b);

}  // namespace swarmkit
