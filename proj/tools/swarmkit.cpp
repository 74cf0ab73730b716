// swarmkit command-line entry point.
//
// Exit codes: 0 success, 1 at least one run failed, 2 configuration or
// output-directory error.

#include <iostream>

#include <CLI11.hpp>

#include "swarmkit/harness.hpp"

namespace {

using namespace swarmkit;

int run_campaign(harness::ExperimentConfig config, std::size_t jobs) {
    harness::preflight_output(config.output_dir);
    const auto campaign = harness::run_experiment(config, jobs);
    harness::export_results(campaign, config.output_dir);

    harness::write_summary_csv(std::cout, campaign.summary);
    std::cout << '\n' << harness::ranking_report(campaign.summary);
    if (const auto failed = campaign.failures()) {
        std::cerr << "swarmkit: " << failed << " run(s) failed; see "
                  << (config.output_dir / "runs.csv").string() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swarmkit: seeded swarm-intelligence optimization experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::size_t jobs = 1;
    auto* run = app.add_subcommand("run", "Run an experiment campaign from a config file");
    run->add_option("--config", config_path, "Experiment config (YAML)")->required();
    run->add_option("--jobs", jobs, "Parallel runs")->check(CLI::PositiveNumber);
    run->add_option("--out", out_dir, "Output directory (overrides the config)");

    std::string tsp_path;
    auto* tsp = app.add_subcommand("tsp", "Run the config's ACO entries on one TSP file");
    tsp->add_option("--file", tsp_path, "TSP instance: 'n' then n lines 'id x y'")->required();
    tsp->add_option("--config", config_path, "Experiment config (YAML)")->required();
    tsp->add_option("--jobs", jobs, "Parallel runs")->check(CLI::PositiveNumber);
    tsp->add_option("--out", out_dir, "Output directory (overrides the config)");

    app.add_subcommand("newton-demo", "Print the Newton root-finding examples");
    app.add_subcommand("list", "List algorithms and benchmarks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("newton-demo")) {
            harness::newton_demo(std::cout);
            return 0;
        }
        if (app.got_subcommand("list")) {
            harness::list_registry(std::cout);
            return 0;
        }

        auto config = harness::load_config(config_path);
        if (!out_dir.empty()) config.output_dir = out_dir;

        if (app.got_subcommand("tsp")) {
            std::vector<harness::AlgorithmEntry> ants;
            for (auto& a : config.algorithms) {
                if (a.is_discrete()) ants.push_back(std::move(a));
            }
            if (ants.empty()) {
                aco::AcoConfig defaults;
                if (config.budget.max_iterations) defaults.iterations = *config.budget.max_iterations;
                ants.push_back(harness::AlgorithmEntry{"aco", defaults});
            }
            config.algorithms = std::move(ants);
            auto instance = aco::load_tsp(tsp_path);
            const std::string label = instance.name();
            config.problems = {harness::ProblemEntry{label, std::move(instance)}};
        }
        return run_campaign(std::move(config), jobs);
    } catch (const ConfigError& e) {
        std::cerr << "swarmkit: config error: " << e.what() << '\n';
        return 2;
    } catch (const harness::IoError& e) {
        std::cerr << "swarmkit: output error: " << e.what() << '\n';
        return 2;
    }
}
