#include "swarmkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

namespace swarmkit {

namespace {

std::string describe_evaluation_failure(const Vector& position, double raw) {
    std::ostringstream os;
    os.precision(17);
    os << "objective returned non-finite value " << raw << " at (";
    for (std::size_t k = 0; k < position.size(); ++k) {
        if (k) os << ", ";
        os << position[k];
    }
    os << ")";
    return os.str();
}

bool bitwise_equal(std::span<const double> a, std::span<const double> b) {
    return a.size() == b.size() &&
           (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

}  // namespace

EvaluationError::EvaluationError(Vector position, double raw_value)
    : std::runtime_error(describe_evaluation_failure(position, raw_value)),
      position_(std::move(position)),
      raw_value_(raw_value) {}

SearchSpace::SearchSpace(Vector lower, Vector upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) throw ConfigError("search space dimension must be at least 1");
    if (lower_.size() != upper_.size())
        throw ConfigError("search space lower/upper bounds differ in length");
    for (std::size_t k = 0; k < lower_.size(); ++k) {
        if (!(lower_[k] < upper_[k]) || !std::isfinite(lower_[k]) || !std::isfinite(upper_[k]))
            throw ConfigError("search space requires finite lower[k] < upper[k] (k=" +
                              std::to_string(k) + ")");
    }
}

SearchSpace SearchSpace::cube(std::size_t dimension, double lo, double hi) {
    return SearchSpace(Vector(dimension, lo), Vector(dimension, hi));
}

double SearchSpace::mean_width() const noexcept {
    double sum = 0.0;
    for (std::size_t k = 0; k < lower_.size(); ++k) sum += upper_[k] - lower_[k];
    return sum / static_cast<double>(lower_.size());
}

bool SearchSpace::contains(std::span<const double> x) const noexcept {
    if (x.size() != lower_.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(x[k] >= lower_[k] && x[k] <= upper_[k])) return false;
    }
    return true;
}

void clamp_in_place(std::span<double> position, const SearchSpace& space) {
    const auto& lo = space.lower();
    const auto& hi = space.upper();
    for (std::size_t k = 0; k < position.size(); ++k) {
        position[k] = std::clamp(position[k], lo[k], hi[k]);
    }
}

Vector clamp_to_bounds(Vector position, const SearchSpace& space) {
    clamp_in_place(position, space);
    return position;
}

Vector point_from_unit(const SearchSpace& space, std::span<const double> r) {
    Vector x(space.dimension());
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] = space.lower()[k] + r[k] * space.width(k);
    }
    return x;
}

Vector random_position(const SearchSpace& space, RngStream& rng) {
    Vector r(space.dimension());
    for (double& v : r) v = rng.uniform();
    return point_from_unit(space, r);
}

double evaluate(const Problem& problem, std::span<const double> position, std::size_t& counter) {
    const double value = problem.objective(position);
    ++counter;
    if (!std::isfinite(value)) {
        throw EvaluationError(Vector(position.begin(), position.end()), value);
    }
    return value;
}

std::size_t argmin(std::span<const double> fitness) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < fitness.size(); ++i) {
        if (fitness[i] < fitness[best]) best = i;
    }
    return best;
}

void Budget::validate() const {
    if (!max_iterations && !max_evaluations)
        throw ConfigError("budget needs max_iterations or max_evaluations");
}

bool same_outcome(const RunResult& a, const RunResult& b) {
    return bitwise_equal(a.best_position, b.best_position) &&
           std::memcmp(&a.best_fitness, &b.best_fitness, sizeof(double)) == 0 &&
           bitwise_equal(a.trace, b.trace) && a.evaluations == b.evaluations &&
           a.seed == b.seed && a.best_tour == b.best_tour;
}

}  // namespace swarmkit
