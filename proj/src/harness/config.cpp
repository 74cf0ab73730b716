#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "swarmkit/benchmarks.hpp"
#include "swarmkit/harness.hpp"

namespace swarmkit::harness {

namespace {

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"pso", "abc", "bat", "firefly", "cuckoo", "aco"};
    return names;
}

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& node, const std::string& what) const {
        std::ostringstream os;
        os << source_;
        if (node.Mark().line >= 0) os << ":" << node.Mark().line + 1;
        os << ": " << what;
        throw ConfigError(os.str());
    }

    void require_map(const YAML::Node& node, const std::string& what) const {
        if (!node.IsMap()) fail(node, what + " must be a mapping");
    }

    void reject_unknown(const YAML::Node& map, const std::set<std::string>& allowed,
                        const std::string& where) const {
        for (const auto& kv : map) {
            const auto key = kv.first.as<std::string>();
            if (!allowed.contains(key)) fail(kv.first, "unknown key '" + key + "' in " + where);
        }
    }

    double real(const YAML::Node& node, const std::string& key) const {
        try {
            const double v = node.as<double>();
            if (!std::isfinite(v)) fail(node, key + " must be finite");
            return v;
        } catch (const YAML::BadConversion&) {
            fail(node, key + " must be a number");
        }
    }

    std::size_t count(const YAML::Node& node, const std::string& key) const {
        try {
            const auto v = node.as<long long>();
            if (v < 0) fail(node, key + " must be a non-negative integer");
            return static_cast<std::size_t>(v);
        } catch (const YAML::BadConversion&) {
            fail(node, key + " must be a non-negative integer");
        }
    }

    std::uint64_t seed(const YAML::Node& node, const std::string& key) const {
        try {
            return node.as<std::uint64_t>();
        } catch (const YAML::BadConversion&) {
            fail(node, key + " must be an unsigned 64-bit integer");
        }
    }

    std::string text(const YAML::Node& node, const std::string& key) const {
        if (!node.IsScalar()) fail(node, key + " must be a string");
        return node.as<std::string>();
    }

private:
    std::string source_;
};

// Applies `key: value` pairs of `node` to `cfg` using the setter table.
template <class Config, class Setters>
Config read_fields(const Reader& r, const YAML::Node& node, Config cfg, const Setters& setters,
                   const std::string& algo) {
    std::set<std::string> allowed = {"name", "label"};
    for (const auto& [key, _] : setters) allowed.insert(key);
    r.reject_unknown(node, allowed, "algorithm '" + algo + "'");
    for (const auto& [key, setter] : setters) {
        if (const auto v = node[key]) setter(cfg, v);
    }
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        r.fail(node, algo + ": " + e.what());
    }
    return cfg;
}

template <class Config>
using Setter = std::function<void(Config&, const YAML::Node&)>;

AlgorithmEntry read_algorithm(const Reader& r, const YAML::Node& node, const Budget& budget) {
    r.require_map(node, "algorithm entry");
    if (!node["name"]) r.fail(node, "algorithm entry needs a 'name'");
    const std::string name = r.text(node["name"], "name");
    AlgorithmEntry entry;
    entry.label = node["label"] ? r.text(node["label"], "label") : name;

    if (name == "pso") {
        std::vector<std::pair<std::string, Setter<swarm::PsoConfig>>> s = {
            {"n", [&](auto& c, auto& v) { c.n = r.count(v, "n"); }},
            {"alpha", [&](auto& c, auto& v) { c.alpha = r.real(v, "alpha"); }},
            {"beta", [&](auto& c, auto& v) { c.beta = r.real(v, "beta"); }},
            {"inertia", [&](auto& c, auto& v) { c.inertia = r.real(v, "inertia"); }},
        };
        entry.config = swarm::AlgorithmConfig{read_fields(r, node, swarm::PsoConfig{}, s, name)};
    } else if (name == "abc") {
        std::vector<std::pair<std::string, Setter<swarm::AbcConfig>>> s = {
            {"n", [&](auto& c, auto& v) { c.n = r.count(v, "n"); }},
            {"limit", [&](auto& c, auto& v) { c.limit = r.count(v, "limit"); }},
        };
        entry.config = swarm::AlgorithmConfig{read_fields(r, node, swarm::AbcConfig{}, s, name)};
    } else if (name == "bat") {
        std::vector<std::pair<std::string, Setter<swarm::BatConfig>>> s = {
            {"n", [&](auto& c, auto& v) { c.n = r.count(v, "n"); }},
            {"f_min", [&](auto& c, auto& v) { c.f_min = r.real(v, "f_min"); }},
            {"f_max", [&](auto& c, auto& v) { c.f_max = r.real(v, "f_max"); }},
            {"alpha_loud", [&](auto& c, auto& v) { c.alpha_loud = r.real(v, "alpha_loud"); }},
            {"gamma_rate", [&](auto& c, auto& v) { c.gamma_rate = r.real(v, "gamma_rate"); }},
            {"A0", [&](auto& c, auto& v) { c.A0 = r.real(v, "A0"); }},
            {"r0", [&](auto& c, auto& v) { c.r0 = r.real(v, "r0"); }},
            {"ba_sign_convention",
             [&](auto& c, auto& v) {
                 const auto sign = r.text(v, "ba_sign_convention");
                 if (sign == "away_from_best") c.sign = swarm::BatSign::away_from_best;
                 else if (sign == "toward_best") c.sign = swarm::BatSign::toward_best;
                 else r.fail(v, "ba_sign_convention must be 'away_from_best' or 'toward_best'");
             }},
        };
        entry.config = swarm::AlgorithmConfig{read_fields(r, node, swarm::BatConfig{}, s, name)};
    } else if (name == "firefly") {
        std::vector<std::pair<std::string, Setter<swarm::FireflyConfig>>> s = {
            {"n", [&](auto& c, auto& v) { c.n = r.count(v, "n"); }},
            {"beta0", [&](auto& c, auto& v) { c.beta0 = r.real(v, "beta0"); }},
            {"gamma", [&](auto& c, auto& v) { c.gamma = r.real(v, "gamma"); }},
            {"alpha0", [&](auto& c, auto& v) { c.alpha0 = r.real(v, "alpha0"); }},
            {"delta", [&](auto& c, auto& v) { c.delta = r.real(v, "delta"); }},
        };
        entry.config =
            swarm::AlgorithmConfig{read_fields(r, node, swarm::FireflyConfig{}, s, name)};
    } else if (name == "cuckoo") {
        std::vector<std::pair<std::string, Setter<swarm::CuckooConfig>>> s = {
            {"n", [&](auto& c, auto& v) { c.n = r.count(v, "n"); }},
            {"pa", [&](auto& c, auto& v) { c.pa = r.real(v, "pa"); }},
            {"alpha_step", [&](auto& c, auto& v) { c.alpha_step = r.real(v, "alpha_step"); }},
            {"lambda", [&](auto& c, auto& v) { c.lambda = r.real(v, "lambda"); }},
            {"alpha_local", [&](auto& c, auto& v) { c.alpha_local = r.real(v, "alpha_local"); }},
        };
        entry.config =
            swarm::AlgorithmConfig{read_fields(r, node, swarm::CuckooConfig{}, s, name)};
    } else if (name == "aco") {
        aco::AcoConfig base;
        // Iterations follow the campaign budget unless set explicitly.
        if (budget.max_iterations) {
            base.iterations = *budget.max_iterations;
        }
        bool explicit_iterations = false;
        std::vector<std::pair<std::string, Setter<aco::AcoConfig>>> s = {
            {"n_ants", [&](auto& c, auto& v) { c.n_ants = r.count(v, "n_ants"); }},
            {"alpha", [&](auto& c, auto& v) { c.alpha = r.real(v, "alpha"); }},
            {"beta", [&](auto& c, auto& v) { c.beta = r.real(v, "beta"); }},
            {"rho", [&](auto& c, auto& v) { c.rho = r.real(v, "rho"); }},
            {"Q", [&](auto& c, auto& v) { c.Q = r.real(v, "Q"); }},
            {"tau0", [&](auto& c, auto& v) { c.tau0 = r.real(v, "tau0"); }},
            {"tau_min", [&](auto& c, auto& v) { c.tau_min = r.real(v, "tau_min"); }},
            {"iterations",
             [&](auto& c, auto& v) {
                 c.iterations = r.count(v, "iterations");
                 explicit_iterations = true;
             }},
        };
        auto cfg = read_fields(r, node, base, s, name);
        if (!explicit_iterations && !budget.max_iterations && budget.max_evaluations) {
            cfg.iterations = (*budget.max_evaluations + cfg.n_ants - 1) / cfg.n_ants;
        }
        entry.config = cfg;
    } else {
        std::string msg = "unknown algorithm '" + name + "'; available:";
        for (const auto& n : algorithm_names()) msg += " " + n;
        r.fail(node["name"], msg);
    }
    return entry;
}

ProblemEntry read_problem(const Reader& r, const YAML::Node& node,
                          const std::filesystem::path& base_dir) {
    r.require_map(node, "problem entry");
    if (node["tsp"]) {
        r.reject_unknown(node, {"tsp", "label"}, "TSP problem");
        std::filesystem::path file = r.text(node["tsp"], "tsp");
        if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
        std::string label = node["label"] ? r.text(node["label"], "label") : file.stem().string();
        try {
            return ProblemEntry{std::move(label), aco::load_tsp(file)};
        } catch (const ConfigError& e) {
            r.fail(node["tsp"], e.what());
        }
    }
    r.reject_unknown(node, {"name", "dimension", "label"}, "problem");
    if (!node["name"]) r.fail(node, "problem entry needs a 'name' or 'tsp'");
    if (!node["dimension"]) r.fail(node, "problem entry needs a 'dimension'");
    const auto name = r.text(node["name"], "name");
    const auto dim = r.count(node["dimension"], "dimension");
    try {
        Problem p = benchmarks::lookup(name, dim);
        std::string label = node["label"] ? r.text(node["label"], "label")
                                          : name + "_d" + std::to_string(dim);
        return ProblemEntry{std::move(label), std::move(p)};
    } catch (const ConfigError& e) {
        r.fail(node["name"], e.what());
    }
}

}  // namespace

std::string_view AlgorithmEntry::name() const {
    if (const auto* c = std::get_if<swarm::AlgorithmConfig>(&config)) {
        return swarm::algorithm_name(*c);
    }
    return "aco";
}

ExperimentConfig parse_config(std::string_view text, std::string_view source,
                              const std::filesystem::path& base_dir) {
    const Reader r{std::string(source)};
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        std::ostringstream os;
        os << source << ":" << e.mark.line + 1 << ":" << e.mark.column + 1
           << ": parse error: " << e.msg;
        throw ConfigError(os.str());
    }
    if (!root.IsMap()) throw ConfigError(std::string(source) + ": config must be a mapping");
    r.reject_unknown(root, {"runs", "base_seed", "budget", "output", "algorithms", "problems"},
                     "config");

    ExperimentConfig cfg;
    if (const auto v = root["runs"]) {
        cfg.runs = r.count(v, "runs");
        if (cfg.runs < 1) r.fail(v, "runs must be >= 1");
    }
    if (const auto v = root["base_seed"]) cfg.base_seed = r.seed(v, "base_seed");
    if (const auto v = root["output"]) cfg.output_dir = r.text(v, "output");
    if (const auto b = root["budget"]) {
        r.require_map(b, "budget");
        r.reject_unknown(b, {"max_iterations", "max_evaluations"}, "budget");
        cfg.budget = Budget{};
        if (b["max_iterations"]) cfg.budget.max_iterations = r.count(b["max_iterations"], "max_iterations");
        if (b["max_evaluations"])
            cfg.budget.max_evaluations = r.count(b["max_evaluations"], "max_evaluations");
        if (!cfg.budget.max_iterations && !cfg.budget.max_evaluations)
            r.fail(b, "budget needs max_iterations or max_evaluations");
    }

    const auto algos = root["algorithms"];
    if (!algos || !algos.IsSequence() || algos.size() == 0)
        r.fail(algos ? algos : root, "'algorithms' must be a non-empty list");
    std::set<std::string> labels;
    for (const auto& node : algos) {
        auto entry = read_algorithm(r, node, cfg.budget);
        if (!labels.insert(entry.label).second)
            r.fail(node, "duplicate algorithm label '" + entry.label + "'");
        cfg.algorithms.push_back(std::move(entry));
    }

    const auto probs = root["problems"];
    if (!probs || !probs.IsSequence() || probs.size() == 0)
        r.fail(probs ? probs : root, "'problems' must be a non-empty list");
    labels.clear();
    for (const auto& node : probs) {
        auto entry = read_problem(r, node, base_dir);
        if (!labels.insert(entry.label).second)
            r.fail(node, "duplicate problem label '" + entry.label + "'");
        cfg.problems.push_back(std::move(entry));
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.string(), path.parent_path());
}

}  // namespace swarmkit::harness
