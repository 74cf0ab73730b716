#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "swarmkit/harness.hpp"

namespace swarmkit::harness {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string real17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

json real_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double json_real(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::ofstream open_for_write(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

}  // namespace

void preflight_output(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir / "traces", ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    const fs::path probe = dir / ".swarmkit-write-probe";
    {
        std::ofstream out(probe, std::ios::trunc);
        if (!out || !(out << "ok") || !out.flush())
            throw IoError("output directory " + dir.string() + " is not writable");
    }
    fs::remove(probe, ec);
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
    out << kSummaryCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.algorithm << ',' << r.problem << ',' << r.runs << ',' << real17(r.best) << ','
            << real17(r.worst) << ',' << real17(r.mean) << ',' << real17(r.median) << ','
            << real17(r.std) << ',' << real17(r.mean_evals) << ',' << real17(r.mean_wall_time_s)
            << '\n';
    }
}

std::string summary_json(std::span<const SummaryRow> rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"algorithm", r.algorithm},
                       {"problem", r.problem},
                       {"runs", r.runs},
                       {"best", real_json(r.best)},
                       {"worst", real_json(r.worst)},
                       {"mean", real_json(r.mean)},
                       {"median", real_json(r.median)},
                       {"std", real_json(r.std)},
                       {"mean_evals", real_json(r.mean_evals)},
                       {"mean_wall_time_s", real_json(r.mean_wall_time_s)}});
    }
    return arr.dump(2) + "\n";
}

std::vector<SummaryRow> parse_summary_json(std::string_view text) {
    const json arr = json::parse(text);
    std::vector<SummaryRow> rows;
    for (const auto& j : arr) {
        SummaryRow r;
        r.algorithm = j.at("algorithm").get<std::string>();
        r.problem = j.at("problem").get<std::string>();
        r.runs = j.at("runs").get<std::size_t>();
        r.best = json_real(j.at("best"));
        r.worst = json_real(j.at("worst"));
        r.mean = json_real(j.at("mean"));
        r.median = json_real(j.at("median"));
        r.std = json_real(j.at("std"));
        r.mean_evals = json_real(j.at("mean_evals"));
        r.mean_wall_time_s = json_real(j.at("mean_wall_time_s"));
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_trace_csv(std::ostream& out, const RunResult& result) {
    out << "iteration,best_fitness\n";
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        out << i + 1 << ',' << real17(result.trace[i]) << '\n';
    }
}

std::string trace_filename(const RunRecord& record) {
    return record.algorithm + "_" + record.problem + "_" + std::to_string(record.run_index) + ".csv";
}

std::string ranking_report(std::span<const SummaryRow> rows) {
    std::vector<std::string> problems;
    for (const auto& r : rows) {
        if (std::find(problems.begin(), problems.end(), r.problem) == problems.end())
            problems.push_back(r.problem);
    }

    std::ostringstream os;
    os << "Ranking by mean final fitness (lower is better)\n";
    std::map<std::string, std::pair<double, std::size_t>> rank_sum;
    std::vector<std::string> algo_order;
    for (const auto& problem : problems) {
        std::vector<const SummaryRow*> group;
        for (const auto& r : rows) {
            if (r.problem == problem) group.push_back(&r);
        }
        std::stable_sort(group.begin(), group.end(), [](const SummaryRow* a, const SummaryRow* b) {
            const bool an = std::isnan(a->mean);
            const bool bn = std::isnan(b->mean);
            if (an != bn) return bn;
            return !an && a->mean < b->mean;
        });
        os << "\nproblem " << problem << "\n";
        for (std::size_t i = 0; i < group.size(); ++i) {
            const auto& r = *group[i];
            os << "  " << i + 1 << ". " << r.algorithm << "  mean=" << real17(r.mean)
               << "  median=" << real17(r.median) << "  runs=" << r.runs << "\n";
            auto& [sum, count] = rank_sum[r.algorithm];
            if (count == 0 && sum == 0.0) algo_order.push_back(r.algorithm);
            sum += static_cast<double>(i + 1);
            ++count;
        }
    }
    if (problems.size() > 1) {
        std::vector<std::pair<double, std::string>> overall;
        for (const auto& a : algo_order) {
            const auto& [sum, count] = rank_sum[a];
            overall.emplace_back(sum / static_cast<double>(count), a);
        }
        std::stable_sort(overall.begin(), overall.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        os << "\nmean rank across problems\n";
        for (const auto& [mean_rank, a] : overall) {
            os << "  " << a << "  " << real17(mean_rank) << "\n";
        }
    }
    os << "\nNote: these rankings only apply for this set of benchmarks, budgets and\n"
          "parameter settings. By the no-free-lunch theorems no ordering holds over all\n"
          "problems, and a different benchmark set may rank the algorithms differently.\n";
    return os.str();
}

void export_results(const Campaign& campaign, const fs::path& dir, std::span<const Format> formats) {
    preflight_output(dir);
    const bool csv = std::find(formats.begin(), formats.end(), Format::csv) != formats.end();
    const bool js = std::find(formats.begin(), formats.end(), Format::json) != formats.end();

    if (csv) {
        auto out = open_for_write(dir / "summary.csv");
        write_summary_csv(out, campaign.summary);
    }
    if (js) {
        auto out = open_for_write(dir / "summary.json");
        out << summary_json(campaign.summary);
    }
    {
        auto out = open_for_write(dir / "runs.csv");
        out << "algorithm,problem,run,seed,status,best_fitness,evaluations,iterations,wall_time_s,"
               "error\n";
        for (const auto& rec : campaign.runs) {
            std::string err = rec.error.value_or("");
            std::replace(err.begin(), err.end(), '\n', ' ');
            std::replace(err.begin(), err.end(), ',', ';');
            out << rec.algorithm << ',' << rec.problem << ',' << rec.run_index << ',' << rec.seed
                << ',' << (rec.ok() ? "ok" : "failed") << ',' << real17(rec.result.best_fitness)
                << ',' << rec.result.evaluations << ',' << rec.result.iterations() << ','
                << real17(rec.result.wall_time) << ',' << err << '\n';
        }
    }
    for (const auto& rec : campaign.runs) {
        if (!rec.ok()) continue;
        auto out = open_for_write(dir / "traces" / trace_filename(rec));
        write_trace_csv(out, rec.result);
    }
    {
        auto out = open_for_write(dir / "ranking.txt");
        out << ranking_report(campaign.summary);
    }
}

}  // namespace swarmkit::harness
