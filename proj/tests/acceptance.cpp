// Acceptance suite: one PASS/FAIL line per criterion. Exits 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "swarmkit/aco.hpp"
#include "swarmkit/benchmarks.hpp"
#include "swarmkit/classical.hpp"
#include "swarmkit/harness.hpp"
#include "swarmkit/levy.hpp"
#include "swarmkit/swarm.hpp"

using namespace swarmkit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("%s criterion %d: %s [%s] (%.1fs)\n", out.pass ? "PASS" : "FAIL", id,
                title.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double brute_force(const aco::TspInstance& inst) {
    std::vector<std::size_t> order(inst.size());
    std::iota(order.begin(), order.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        best = std::min(best, aco::tour_length(inst, order));
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return best;
}

std::vector<swarm::AlgorithmConfig> continuous_algorithms() {
    return {swarm::PsoConfig{}, swarm::AbcConfig{}, swarm::BatConfig{}, swarm::FireflyConfig{},
            swarm::CuckooConfig{}};
}

constexpr std::uint64_t kBaseSeed = 20240601;

// Fraction of runs (out of 100) whose final best is below `target`.
int count_below(const swarm::AlgorithmConfig& cfg, const Problem& problem, std::size_t iters,
                double target, const std::string& label) {
    int ok = 0;
    for (std::size_t run = 0; run < 100; ++run) {
        const auto seed = harness::derive_seed(kBaseSeed, label, problem.name, run);
        ok += swarm::run(cfg, problem, Budget{iters, std::nullopt}, seed).best_fitness < target;
    }
    return ok;
}

}  // namespace

int main() {
    const auto p = [](double x) { return x * x + 9.0 * x - 10.0; };
    const auto dp = [](double x) { return 2.0 * x + 9.0; };

    report(1, "Newton root-finding examples", [&] {
        using classical::NewtonStatus;
        const auto a = classical::newton_root(p, dp, 10.0, 1e-9, 100);
        const auto b = classical::newton_root(p, dp, 100.0, 1e-9, 100);
        const auto c = classical::newton_root(p, dp, -5.0, 1e-9, 100);
        const auto d = classical::newton_root(p, dp, -4.5, 1e-9, 100);
        const bool pass =
            a.status == NewtonStatus::converged && std::abs(a.value - 1.0) < 1e-9 &&
            a.iterations <= 5 && b.status == NewtonStatus::converged &&
            std::abs(b.value - 1.0) < 1e-9 && b.iterations >= 6 && b.iterations <= 10 &&
            c.status == NewtonStatus::converged && std::abs(c.value + 10.0) < 1e-9 &&
            c.iterations >= 5 && c.iterations <= 9 && d.status == NewtonStatus::derivative_vanished;
        return Outcome{pass, fmt("x0=10: %zu it, x0=100: %zu it, x0=-5: %zu it -> %.12g, x0=-4.5: %s",
                                 a.iterations, b.iterations, c.iterations, c.value,
                                 std::string(classical::to_string(d.status)).c_str())};
    });

    report(2, "Newton basin: 100 starts in (0, 100] reach 1", [&] {
        int to_one = 0, to_minus_ten = 0;
        for (int k = 1; k <= 100; ++k) {
            const auto r = classical::newton_root(p, dp, k, 1e-9, 100);
            to_one += std::abs(r.value - 1.0) < 1e-6;
            to_minus_ten += std::abs(r.value + 10.0) < 1e-6;
        }
        return Outcome{to_one == 100 && to_minus_ten == 0,
                       fmt("%d to 1, %d to -10", to_one, to_minus_ten)};
    });

    const auto tsp10 = aco::random_uniform_instance(10, 7, "uniform10");

    report(3, "determinism and seed isolation", [&] {
        const auto ras = benchmarks::lookup("rastrigin", 5);
        int identical = 0, total = 0;
        for (const auto& cfg : continuous_algorithms()) {
            ++total;
            identical += same_outcome(swarm::run(cfg, ras, Budget{200, std::nullopt}, 42),
                                      swarm::run(cfg, ras, Budget{200, std::nullopt}, 42));
        }
        aco::AcoConfig acfg;
        acfg.iterations = 200;
        ++total;
        identical += same_outcome(aco::aco_run(tsp10, acfg, 42), aco::aco_run(tsp10, acfg, 42));

        const std::string yaml = R"(
runs: 4
base_seed: 42
budget: {max_iterations: 50}
algorithms:
  - {name: pso}
  - {name: abc}
  - {name: bat}
  - {name: firefly}
  - {name: cuckoo}
  - {name: aco}
problems:
  - {name: rastrigin, dimension: 5}
  - {name: sphere, dimension: 3}
  - {tsp: cities10.tsp}
)";
        auto forward = harness::parse_config(yaml, "acceptance", SWARMKIT_EXAMPLE_DIR);
        auto reversed = forward;
        std::reverse(reversed.algorithms.begin(), reversed.algorithms.end());
        std::reverse(reversed.problems.begin(), reversed.problems.end());
        const auto a = harness::run_experiment(forward, 4);
        const auto b = harness::run_experiment(reversed, 3);
        std::size_t matched = 0;
        for (const auto& ra : a.runs) {
            for (const auto& rb : b.runs) {
                if (rb.algorithm == ra.algorithm && rb.problem == ra.problem &&
                    rb.run_index == ra.run_index && same_outcome(ra.result, rb.result)) {
                    ++matched;
                    break;
                }
            }
        }
        const bool pass = identical == total && matched == a.runs.size() &&
                          a.runs.size() == b.runs.size() && a.failures() == 0;
        return Outcome{pass, fmt("%d/%d algorithms bit-identical; %zu/%zu runs unchanged under "
                                 "pair permutation",
                                 identical, total, matched, a.runs.size())};
    });

    report(4, "elitism: 100-iteration traces never increase", [&] {
        int monotone = 0, total = 0;
        const auto check = [&](const RunResult& r) {
            ++total;
            bool ok = r.trace.size() == 100;
            for (std::size_t t = 1; t < r.trace.size(); ++t) ok = ok && r.trace[t] <= r.trace[t - 1];
            monotone += ok;
        };
        for (const auto& name : benchmarks::names()) {
            const auto problem = benchmarks::lookup(name, 5);
            for (const auto& cfg : continuous_algorithms()) {
                for (std::uint64_t seed = 0; seed < 5; ++seed)
                    check(swarm::run(cfg, problem, Budget{100, std::nullopt}, seed));
            }
        }
        aco::AcoConfig acfg;
        acfg.iterations = 100;
        for (std::uint64_t seed = 0; seed < 5; ++seed) check(aco::aco_run(tsp10, acfg, seed));
        return Outcome{monotone == total, fmt("%d/%d traces monotone", monotone, total)};
    });

    report(5, "Levy tail at lambda=1.5", [&] {
        const levy::LevyConfig cfg{1.5, 1.0};
        RngStream rng(kBaseSeed);
        constexpr std::size_t kN = 1000000;
        std::vector<double> mags(kN);
        std::size_t positive = 0;
        for (auto& m : mags) {
            const double s = levy::sample_step(cfg, rng);
            positive += s > 0.0;
            m = std::abs(s);
        }
        const std::size_t k = kN / 100;
        std::nth_element(mags.begin(), mags.begin() + k, mags.end(), std::greater<>());
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i) s += std::log(mags[i] / mags[k]);
        const double hill = static_cast<double>(k) / s;
        const double balance = static_cast<double>(positive) / kN;
        return Outcome{hill >= 1.3 && hill <= 1.7 && balance >= 0.49 && balance <= 0.51,
                       fmt("Hill %.4f (need [1.3, 1.7]), positive fraction %.4f (need [0.49, 0.51])",
                           hill, balance)};
    });

    report(6, "ACO against brute-force optimum", [&] {
        const auto five = aco::random_uniform_instance(5, 7, "uniform5");
        const double opt5 = brute_force(five);
        const double opt10 = brute_force(tsp10);
        aco::AcoConfig cfg;
        cfg.iterations = 50;
        int hit5 = 0;
        for (std::size_t run = 0; run < 100; ++run)
            hit5 += aco::aco_run(five, cfg, harness::derive_seed(kBaseSeed, "aco", "uniform5", run))
                        .best_fitness <= opt5 * (1.0 + 1e-12);
        cfg.iterations = 200;
        int hit10 = 0;
        for (std::size_t run = 0; run < 100; ++run)
            hit10 +=
                aco::aco_run(tsp10, cfg, harness::derive_seed(kBaseSeed, "aco", "uniform10", run))
                    .best_fitness <= 1.05 * opt10;
        return Outcome{hit5 >= 95 && hit10 >= 90,
                       fmt("5 cities: %d/100 optimal in 50 it (need 95); 10 cities: %d/100 within "
                           "5%% in 200 it (need 90)",
                           hit5, hit10)};
    });

    report(7, "route probabilities proportional to pheromone", [&] {
        const auto inst = aco::TspInstance::from_matrix("eq", {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        aco::PheromoneField tau(3, 1.0);
        tau.set(0, 2, 3.0);
        const std::vector<std::size_t> allowed{1, 2};
        const auto pr = aco::route_probabilities(0, allowed, tau, inst, 1.0, 1.0);
        return Outcome{pr[0] == 0.25 && pr[1] == 0.75, fmt("(%.17g, %.17g)", pr[0], pr[1])};
    });

    report(8, "convergence properties", [&] {
        const auto sphere = benchmarks::lookup("sphere", 10);
        // Unit inertia, alpha = beta = 1, no velocity clamp.
        const int pso_ok = count_below(swarm::PsoConfig{}, sphere, 2000, 1e-3, "pso");
        swarm::PsoConfig damped;
        damped.inertia = 0.7298;
        const int pso_damped = count_below(damped, sphere, 2000, 1e-3, "pso");

        const auto ras = benchmarks::lookup("rastrigin", 5);
        const int cs_ok = count_below(swarm::CuckooConfig{}, ras, 1000, 1e-2, "cuckoo");

        const auto two = benchmarks::lookup("two_mode", 2);
        int fa_ok = 0;
        const swarm::FireflyConfig fa;
        for (std::size_t run = 0; run < 100; ++run) {
            RngStream rng(harness::derive_seed(kBaseSeed, "firefly", two.name, run));
            Evaluator ev(two);
            auto pop = swarm::firefly_init(fa, ev, rng);
            for (std::size_t t = 0; t < 100; ++t) swarm::firefly_step(pop, ev, fa, t, rng);
            bool near_a = false, near_b = false;
            for (const auto& agent : pop.agents) {
                double da = 0.0, db = 0.0;
                for (double x : agent.position) {
                    da += (x + 2.5) * (x + 2.5);
                    db += (x - 2.5) * (x - 2.5);
                }
                near_a = near_a || std::sqrt(da) < 0.5;
                near_b = near_b || std::sqrt(db) < 0.5;
            }
            fa_ok += near_a && near_b;
        }
        return Outcome{pso_ok >= 90 && cs_ok >= 90 && fa_ok >= 50,
                       fmt("PSO sphere D=10 2000 it: %d/100 (need 90; with inertia 0.7298: %d/100); "
                           "CS rastrigin D=5 1000 it: %d/100 (need 90); "
                           "FA two-mode D=2 100 it: %d/100 (need 50)",
                           pso_ok, pso_damped, cs_ok, fa_ok)};
    });

    report(9, "analytic gradients match central differences", [&] {
        RngStream rng(kBaseSeed);
        int good = 0, total = 0;
        double worst = 0.0;
        for (const auto& name : benchmarks::names()) {
            const auto problem = benchmarks::lookup(name, 5);
            for (int i = 0; i < 20; ++i) {
                const Vector x = random_position(problem.space, rng);
                const Vector g = problem.gradient(x);
                bool ok = true;
                for (std::size_t k = 0; k < x.size(); ++k) {
                    const double h = 1e-6 * std::max(1.0, std::abs(x[k]));
                    Vector xp = x, xm = x;
                    xp[k] += h;
                    xm[k] -= h;
                    const double fd = (problem.objective(xp) - problem.objective(xm)) / (2.0 * h);
                    const double rel = std::abs(g[k] - fd) / std::max(1.0, std::abs(fd));
                    worst = std::max(worst, rel);
                    ok = ok && rel <= 1e-4;
                }
                ++total;
                good += ok;
            }
        }
        return Outcome{good == total, fmt("%d/%d points, worst relative error %.2e", good, total, worst)};
    });

    report(10, "loudness and randomness schedules", [&] {
        const auto problem = benchmarks::lookup("sphere", 5);
        const swarm::BatConfig bat;
        Evaluator ev(problem);
        RngStream rng(kBaseSeed);
        auto pop = swarm::bat_init(bat, ev, rng);
        for (int t = 0; t < 100; ++t) swarm::bat_step(pop, ev, bat, rng);
        double worst_bat = 0.0;
        std::size_t accepts = 0;
        for (const auto& b : pop.agents) {
            const double expected =
                bat.A0 * std::pow(bat.alpha_loud, static_cast<double>(b.aux.accepted));
            worst_bat = std::max(worst_bat, std::abs(b.aux.loudness - expected));
            accepts += b.aux.accepted;
        }
        double worst_fa = 0.0;
        for (std::size_t t = 0; t <= 200; ++t) {
            double expected = 0.5;
            for (std::size_t i = 0; i < t; ++i) expected *= 0.97;
            worst_fa = std::max(worst_fa, std::abs(swarm::firefly_alpha(0.5, 0.97, t) - expected));
        }
        const double example = std::abs(swarm::firefly_alpha(0.5, 0.9, 2) - 0.405);
        return Outcome{worst_bat <= 1e-12 && worst_fa <= 1e-12 && example <= 1e-12 && accepts > 0,
                       fmt("loudness max error %.1e over %zu accepts; alpha_t max error %.1e",
                           worst_bat, accepts, worst_fa)};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
