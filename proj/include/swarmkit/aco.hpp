#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swarmkit/core.hpp"
#include "swarmkit/rng.hpp"

namespace swarmkit::aco {

/// Symmetric travelling-salesman instance with at least 3 cities.
class TspInstance {
public:
    /// Euclidean distances between (x, y) points.
    static TspInstance from_coordinates(std::string name,
                                        std::vector<std::pair<double, double>> coordinates);
    /// Explicit matrix; must be symmetric with zero diagonal and positive
    /// off-diagonal entries.
    static TspInstance from_matrix(std::string name, std::vector<std::vector<double>> distances);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double distance(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
    [[nodiscard]] const std::vector<std::pair<double, double>>& coordinates() const noexcept {
        return coords_;
    }

private:
    TspInstance(std::string name, std::size_t n, std::vector<double> dist,
                std::vector<std::pair<double, double>> coords);

    std::string name_;
    std::size_t n_;
    std::vector<double> dist_;
    std::vector<std::pair<double, double>> coords_;
};

/// Reads `n` on the first line, then n lines `id x y`. Cities are indexed in
/// line order; ids must be distinct integers. Blank lines and lines starting
/// with '#' are ignored. Throws ConfigError with the offending line number.
TspInstance parse_tsp(std::istream& in, std::string name);
TspInstance load_tsp(const std::filesystem::path& path);

/// n cities uniform in the unit square, drawn from RngStream(seed).
TspInstance random_uniform_instance(std::size_t n, std::uint64_t seed, std::string name);

/// Symmetric pheromone matrix with a positive floor.
class PheromoneField {
public:
    PheromoneField(std::size_t n, double initial, double tau_min = 1e-9);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double tau_min() const noexcept { return tau_min_; }
    [[nodiscard]] double get(std::size_t i, std::size_t j) const { return tau_[i * n_ + j]; }
    /// Sets both (i, j) and (j, i), flooring at tau_min.
    void set(std::size_t i, std::size_t j, double value);

private:
    std::size_t n_;
    double tau_min_;
    std::vector<double> tau_;
};

struct AcoConfig {
    std::size_t n_ants = 20;
    double alpha = 1.0;  // pheromone influence
    double beta = 2.0;   // desirability influence
    double rho = 0.5;    // evaporation rate
    double Q = 1.0;      // deposit constant
    std::size_t iterations = 100;
    double tau0 = 1.0;
    double tau_min = 1e-9;

    void validate() const;
};

struct Tour {
    std::vector<std::size_t> order;
    double length = 0.0;
};

/// Cyclic length of `order`.
double tour_length(const TspInstance& instance, std::span<const std::size_t> order);

/// p_j proportional to tau_ij^alpha * (1/d_ij)^beta over the allowed cities.
/// When every weight is zero the result is uniform, a warning goes to
/// std::clog and *used_fallback (if given) is set.
std::vector<double> route_probabilities(std::size_t current, std::span<const std::size_t> allowed,
                                        const PheromoneField& tau, const TspInstance& instance,
                                        double alpha, double beta, bool* used_fallback = nullptr);

/// Uniform random start city, then one route_probabilities draw per step.
Tour construct_tour(const TspInstance& instance, const PheromoneField& tau,
                    const AcoConfig& config, RngStream& rng);

/// Evaporate every edge by (1 - rho), then add Q/length along each tour's
/// edges, then floor at tau_min.
void update_pheromone(PheromoneField& tau, std::span<const Tour> tours, const AcoConfig& config);

/// Seed of the stream ant `ant` uses in iteration `iteration`:
/// mix64(mix64(run_seed ^ mix64(iteration)) + ant).
std::uint64_t ant_seed(std::uint64_t run_seed, std::size_t iteration, std::size_t ant);

/// Ant system: tau starts at tau0; each iteration builds n_ants tours (ant k
/// on its own sub-stream, see ant_seed), then updates the pheromone. The
/// trace holds the best length so far; evaluations counts constructed tours.
RunResult aco_run(const TspInstance& instance, const AcoConfig& config, std::uint64_t seed);

}  // namespace swarmkit::aco
