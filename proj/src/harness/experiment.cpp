#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "swarmkit/harness.hpp"

namespace swarmkit::harness {

namespace {

struct Task {
    const AlgorithmEntry* algorithm;
    const ProblemEntry* problem;
    std::size_t run_index;
};

RunRecord execute(const Task& task, const ExperimentConfig& config) {
    RunRecord rec;
    rec.algorithm = task.algorithm->label;
    rec.problem = task.problem->label;
    rec.run_index = task.run_index;
    rec.seed = derive_seed(config.base_seed, rec.algorithm, rec.problem, rec.run_index);
    try {
        if (task.algorithm->is_discrete()) {
            rec.result = aco::aco_run(std::get<aco::TspInstance>(task.problem->problem),
                                      std::get<aco::AcoConfig>(task.algorithm->config), rec.seed);
        } else {
            rec.result = swarm::run(std::get<swarm::AlgorithmConfig>(task.algorithm->config),
                                    std::get<Problem>(task.problem->problem), config.budget,
                                    rec.seed);
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
        rec.result = RunResult{};
        rec.result.seed = rec.seed;
    }
    return rec;
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view algorithm,
                          std::string_view problem, std::size_t run_index) {
    std::uint64_t h = mix64(base_seed ^ fnv1a64(algorithm));
    h = mix64(h ^ fnv1a64(problem));
    return mix64(h ^ static_cast<std::uint64_t>(run_index));
}

SummaryRow summarize(std::string algorithm, std::string problem,
                     std::span<const RunRecord> records) {
    SummaryRow row;
    row.algorithm = std::move(algorithm);
    row.problem = std::move(problem);

    std::vector<double> finals;
    double evals = 0.0;
    double wall = 0.0;
    for (const auto& rec : records) {
        if (!rec.ok()) continue;
        finals.push_back(rec.result.best_fitness);
        evals += static_cast<double>(rec.result.evaluations);
        wall += rec.result.wall_time;
    }
    row.runs = finals.size();
    if (finals.empty()) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        row.best = row.worst = row.mean = row.median = row.std = nan;
        row.mean_evals = row.mean_wall_time_s = nan;
        return row;
    }
    const double n = static_cast<double>(finals.size());
    row.best = *std::min_element(finals.begin(), finals.end());
    row.worst = *std::max_element(finals.begin(), finals.end());
    double sum = 0.0;
    for (double f : finals) sum += f;
    row.mean = sum / n;
    row.median = median_of(finals);
    if (finals.size() > 1) {
        double ss = 0.0;
        for (double f : finals) ss += (f - row.mean) * (f - row.mean);
        row.std = std::sqrt(ss / (n - 1.0));
    } else {
        row.std = 0.0;
    }
    row.mean_evals = evals / n;
    row.mean_wall_time_s = wall / n;
    return row;
}

std::size_t Campaign::failures() const {
    return static_cast<std::size_t>(
        std::count_if(runs.begin(), runs.end(), [](const RunRecord& r) { return !r.ok(); }));
}

Campaign run_experiment(const ExperimentConfig& config, std::size_t jobs) {
    std::vector<std::pair<const AlgorithmEntry*, const ProblemEntry*>> pairs;
    for (const auto& a : config.algorithms) {
        for (const auto& p : config.problems) {
            if (a.is_discrete() == p.is_discrete()) pairs.emplace_back(&a, &p);
        }
    }

    std::vector<Task> tasks;
    tasks.reserve(pairs.size() * config.runs);
    for (const auto& [a, p] : pairs) {
        for (std::size_t r = 0; r < config.runs; ++r) tasks.push_back(Task{a, p, r});
    }

    Campaign campaign;
    campaign.runs.resize(tasks.size());
    const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, tasks.size()));
    if (workers == 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) campaign.runs[t] = execute(tasks[t], config);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < tasks.size(); t = next++) {
                    campaign.runs[t] = execute(tasks[t], config);
                }
            });
        }
    }

    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const std::span<const RunRecord> block(campaign.runs.data() + p * config.runs, config.runs);
        campaign.summary.push_back(summarize(pairs[p].first->label, pairs[p].second->label, block));
    }
    return campaign;
}

}  // namespace swarmkit::harness
