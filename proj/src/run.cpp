#include <chrono>

#include "swarmkit/swarm.hpp"

namespace swarmkit::swarm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class Aux, class Init, class Step>
RunResult run_loop(const Problem& problem, const Budget& budget, std::uint64_t seed, Init init,
                   Step step) {
    budget.validate();
    const auto start = std::chrono::steady_clock::now();

    RngStream rng(seed);
    Evaluator evaluator(problem);
    Population<Aux> pop = init(evaluator, rng);

    RunResult result;
    result.seed = seed;
    result.best_position = pop.best().position;
    result.best_fitness = pop.best().fitness;

    auto exhausted = [&] {
        return (budget.max_iterations && pop.generation >= *budget.max_iterations) ||
               (budget.max_evaluations && evaluator.count() >= *budget.max_evaluations);
    };
    while (!exhausted()) {
        step(pop, evaluator, rng);
        const auto& best = pop.best();
        if (best.fitness < result.best_fitness) {
            result.best_fitness = best.fitness;
            result.best_position = best.position;
        }
        result.trace.push_back(result.best_fitness);
    }

    result.evaluations = evaluator.count();
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

std::string_view algorithm_name(const AlgorithmConfig& config) {
    return std::visit(Overloaded{
                          [](const PsoConfig&) { return std::string_view("pso"); },
                          [](const AbcConfig&) { return std::string_view("abc"); },
                          [](const BatConfig&) { return std::string_view("bat"); },
                          [](const FireflyConfig&) { return std::string_view("firefly"); },
                          [](const CuckooConfig&) { return std::string_view("cuckoo"); },
                      },
                      config);
}

void validate(const AlgorithmConfig& config) {
    std::visit([](const auto& c) { c.validate(); }, config);
}

RunResult run(const AlgorithmConfig& config, const Problem& problem, const Budget& budget,
              std::uint64_t seed) {
    return std::visit(
        Overloaded{
            [&](const PsoConfig& c) {
                return run_loop<PsoState>(
                    problem, budget, seed,
                    [&](Evaluator& e, RngStream& r) { return pso_init(c, e, r); },
                    [&](auto& pop, Evaluator& e, RngStream& r) { pso_step(pop, e, c, r); });
            },
            [&](const AbcConfig& c) {
                return run_loop<AbcState>(
                    problem, budget, seed,
                    [&](Evaluator& e, RngStream& r) { return abc_init(c, e, r); },
                    [&](auto& pop, Evaluator& e, RngStream& r) { abc_step(pop, e, c, r); });
            },
            [&](const BatConfig& c) {
                return run_loop<BatState>(
                    problem, budget, seed,
                    [&](Evaluator& e, RngStream& r) { return bat_init(c, e, r); },
                    [&](auto& pop, Evaluator& e, RngStream& r) { bat_step(pop, e, c, r); });
            },
            [&](const FireflyConfig& c) {
                return run_loop<NoAux>(
                    problem, budget, seed,
                    [&](Evaluator& e, RngStream& r) { return firefly_init(c, e, r); },
                    [&](auto& pop, Evaluator& e, RngStream& r) {
                        firefly_step(pop, e, c, pop.generation, r);
                    });
            },
            [&](const CuckooConfig& c) {
                return run_loop<NoAux>(
                    problem, budget, seed,
                    [&](Evaluator& e, RngStream& r) { return cuckoo_init(c, e, r); },
                    [&](auto& pop, Evaluator& e, RngStream& r) { cuckoo_step(pop, e, c, r); });
            },
        },
        config);
}

}  // namespace swarmkit::swarm
