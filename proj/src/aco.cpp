#include "swarmkit/aco.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace swarmkit::aco {

TspInstance::TspInstance(std::string name, std::size_t n, std::vector<double> dist,
                         std::vector<std::pair<double, double>> coords)
    : name_(std::move(name)), n_(n), dist_(std::move(dist)), coords_(std::move(coords)) {}

TspInstance TspInstance::from_coordinates(std::string name,
                                          std::vector<std::pair<double, double>> coordinates) {
    const std::size_t n = coordinates.size();
    if (n < 3) throw ConfigError("TSP instance needs at least 3 cities");
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::hypot(coordinates[i].first - coordinates[j].first,
                                        coordinates[i].second - coordinates[j].second);
            if (!(d > 0.0) || !std::isfinite(d))
                throw ConfigError("TSP cities " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide");
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    return TspInstance(std::move(name), n, std::move(dist), std::move(coordinates));
}

TspInstance TspInstance::from_matrix(std::string name, std::vector<std::vector<double>> distances) {
    const std::size_t n = distances.size();
    if (n < 3) throw ConfigError("TSP instance needs at least 3 cities");
    std::vector<double> dist(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (distances[i].size() != n) throw ConfigError("TSP distance matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            const double d = distances[i][j];
            if (i == j ? d != 0.0 : !(d > 0.0 && std::isfinite(d)))
                throw ConfigError("TSP distance matrix needs zero diagonal and positive entries");
            dist[i * n + j] = d;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i * n + j] != dist[j * n + i])
                throw ConfigError("TSP distance matrix is not symmetric");
        }
    }
    return TspInstance(std::move(name), n, std::move(dist), {});
}

TspInstance parse_tsp(std::istream& in, std::string name) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    };
    auto fail = [&](const std::string& what) {
        throw ConfigError(name + ":" + std::to_string(line_no) + ": " + what);
    };

    if (!next_line()) fail("missing city count");
    long long n = 0;
    {
        std::istringstream ls(line);
        std::string rest;
        if (!(ls >> n) || (ls >> rest)) fail("expected a single city count");
    }
    if (n < 3) fail("TSP instance needs at least 3 cities");

    std::vector<std::pair<double, double>> coords;
    std::set<long long> ids;
    for (long long i = 0; i < n; ++i) {
        if (!next_line()) fail("expected " + std::to_string(n) + " city lines");
        std::istringstream ls(line);
        long long id = 0;
        double x = 0.0, y = 0.0;
        std::string rest;
        if (!(ls >> id >> x >> y) || (ls >> rest)) fail("expected 'id x y'");
        if (!std::isfinite(x) || !std::isfinite(y)) fail("non-finite coordinate");
        if (!ids.insert(id).second) fail("duplicate city id " + std::to_string(id));
        coords.emplace_back(x, y);
    }
    if (next_line()) fail("unexpected trailing content");
    return TspInstance::from_coordinates(std::move(name), std::move(coords));
}

TspInstance load_tsp(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open TSP file " + path.string());
    // Parse under the full path so errors point at the file, then rename.
    auto parsed = parse_tsp(in, path.string());
    return TspInstance::from_coordinates(path.stem().string(), parsed.coordinates());
}

TspInstance random_uniform_instance(std::size_t n, std::uint64_t seed, std::string name) {
    RngStream rng(seed);
    std::vector<std::pair<double, double>> coords(n);
    for (auto& [x, y] : coords) {
        x = rng.uniform();
        y = rng.uniform();
    }
    return TspInstance::from_coordinates(std::move(name), std::move(coords));
}

PheromoneField::PheromoneField(std::size_t n, double initial, double tau_min)
    : n_(n), tau_min_(tau_min), tau_(n * n, std::max(initial, tau_min)) {
    if (!(tau_min > 0.0)) throw ConfigError("tau_min must be > 0");
}

void PheromoneField::set(std::size_t i, std::size_t j, double value) {
    const double v = std::max(value, tau_min_);
    tau_[i * n_ + j] = v;
    tau_[j * n_ + i] = v;
}

void AcoConfig::validate() const {
    if (n_ants < 1) throw ConfigError("n_ants must be >= 1");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be > 0");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw ConfigError("beta must be > 0");
    if (!(rho > 0.0 && rho < 1.0)) throw ConfigError("rho must be in (0,1)");
    if (!(Q > 0.0) || !std::isfinite(Q)) throw ConfigError("Q must be > 0");
    if (!(tau0 > 0.0) || !std::isfinite(tau0)) throw ConfigError("tau0 must be > 0");
    if (!(tau_min > 0.0) || !std::isfinite(tau_min)) throw ConfigError("tau_min must be > 0");
}

double tour_length(const TspInstance& instance, std::span<const std::size_t> order) {
    double length = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        length += instance.distance(order[i], order[(i + 1) % order.size()]);
    }
    return length;
}

std::vector<double> route_probabilities(std::size_t current, std::span<const std::size_t> allowed,
                                        const PheromoneField& tau, const TspInstance& instance,
                                        double alpha, double beta, bool* used_fallback) {
    std::vector<double> p(allowed.size());
    double total = 0.0;
    for (std::size_t a = 0; a < allowed.size(); ++a) {
        const std::size_t j = allowed[a];
        const double desirability = 1.0 / instance.distance(current, j);
        p[a] = std::pow(tau.get(current, j), alpha) * std::pow(desirability, beta);
        total += p[a];
    }
    const bool fallback = !(total > 0.0) || !std::isfinite(total);
    if (used_fallback) *used_fallback = fallback;
    if (fallback) {
        std::clog << "swarmkit: route weights degenerate at city " << current
                  << "; choosing uniformly\n";
        std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(allowed.size()));
        return p;
    }
    for (double& v : p) v /= total;
    return p;
}

Tour construct_tour(const TspInstance& instance, const PheromoneField& tau,
                    const AcoConfig& config, RngStream& rng) {
    const std::size_t n = instance.size();
    Tour tour;
    tour.order.reserve(n);
    std::vector<std::size_t> allowed;
    allowed.reserve(n);

    std::size_t current = rng.uniform_index(n);
    tour.order.push_back(current);
    for (std::size_t c = 0; c < n; ++c) {
        if (c != current) allowed.push_back(c);
    }
    while (!allowed.empty()) {
        const auto p = route_probabilities(current, allowed, tau, instance, config.alpha,
                                           config.beta);
        const double r = rng.uniform();
        std::size_t pick = allowed.size() - 1;
        double cumulative = 0.0;
        for (std::size_t a = 0; a < p.size(); ++a) {
            cumulative += p[a];
            if (r < cumulative) {
                pick = a;
                break;
            }
        }
        current = allowed[pick];
        tour.order.push_back(current);
        allowed.erase(allowed.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    tour.length = tour_length(instance, tour.order);
    return tour;
}

void update_pheromone(PheromoneField& tau, std::span<const Tour> tours, const AcoConfig& config) {
    const std::size_t n = tau.size();
    std::vector<double> next(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] = (1.0 - config.rho) * tau.get(i, j);
    }
    for (const auto& tour : tours) {
        const double deposit = config.Q / tour.length;
        const std::size_t m = tour.order.size();
        for (std::size_t e = 0; e < m; ++e) {
            const std::size_t a = tour.order[e];
            const std::size_t b = tour.order[(e + 1) % m];
            next[a * n + b] += deposit;
            if (a != b) next[b * n + a] += deposit;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) tau.set(i, j, next[i * n + j]);
    }
}

std::uint64_t ant_seed(std::uint64_t run_seed, std::size_t iteration, std::size_t ant) {
    return mix64(mix64(run_seed ^ mix64(iteration)) + ant);
}

RunResult aco_run(const TspInstance& instance, const AcoConfig& config, std::uint64_t seed) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    PheromoneField tau(instance.size(), config.tau0, config.tau_min);
    RunResult result;
    result.seed = seed;
    std::vector<Tour> tours(config.n_ants);

    for (std::size_t it = 0; it < config.iterations; ++it) {
        for (std::size_t k = 0; k < config.n_ants; ++k) {
            RngStream ant_rng(ant_seed(seed, it, k));
            tours[k] = construct_tour(instance, tau, config, ant_rng);
            ++result.evaluations;
            if (tours[k].length < result.best_fitness) {
                result.best_fitness = tours[k].length;
                result.best_tour = tours[k].order;
            }
        }
        update_pheromone(tau, tours, config);
        result.trace.push_back(result.best_fitness);
    }

    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace swarmkit::aco
