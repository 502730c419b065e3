#include "fairga/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "fairga/engine.hpp"
#include "fairga/objective.hpp"

namespace fairga {

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::FairGa: return "fairga";
        case Algorithm::Ga: return "ga";
        case Algorithm::Both: return "both";
    }
    return "unknown";
}

std::optional<Algorithm> algorithm_by_name(std::string_view name) {
    if (name == "fairga") return Algorithm::FairGa;
    if (name == "ga") return Algorithm::Ga;
    if (name == "both") return Algorithm::Both;
    return std::nullopt;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    // skip the interpolation when the quantile lands on an element: with
    // infinities above it, 0 * inf would otherwise poison the result with NaN
    if (frac == 0.0 || lo == hi) return sorted[lo];
    return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

bool reached_optimum(double value, double optimum, double threshold) {
    return std::abs(value - optimum) <= threshold * (1.0 + std::abs(optimum));
}

std::string trace_filename(Algorithm algo, std::string_view objective, std::uint64_t seed) {
    std::string name(to_string(algo));
    name += '_';
    name += objective;
    name += '_';
    name += std::to_string(seed);
    name += ".csv";
    return name;
}

std::string summary_filename(Algorithm algo, std::string_view objective) {
    std::string name(to_string(algo));
    name += '_';
    name += objective;
    name += "_summary.csv";
    return name;
}

void write_trace_csv(std::ostream& os, const RunTrace& trace) {
    os << kTraceCsvHeader << '\n';
    for (const auto& row : trace.rows) {
        os << row.iteration << ',' << to_string(row.stage) << ',' << row.pop_size << ','
           << format_double(row.best_fitness) << ',' << format_double(row.mean_fitness) << ','
           << row.cum_au << '\n';
    }
}

void write_summary_csv(std::ostream& os, const std::vector<RunTrace>& traces) {
    os << "iteration,median_best,q1_best,q3_best\n";
    if (traces.empty()) return;
    const auto rows = traces.front().rows.size();
    for (const auto& t : traces)
        if (t.rows.size() != rows)
            throw Error("summary requires traces with identical row counts");

    std::vector<double> best(traces.size());
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < traces.size(); ++i) best[i] = traces[i].rows[r].best_fitness;
        std::sort(best.begin(), best.end());
        os << traces.front().rows[r].iteration << ',' << format_double(quantile_sorted(best, 0.5))
           << ',' << format_double(quantile_sorted(best, 0.25)) << ','
           << format_double(quantile_sorted(best, 0.75)) << '\n';
    }
}

namespace cli {

namespace {

int write_file(const std::filesystem::path& path,
               const std::function<void(std::ostream&)>& writer, std::ostream& diag) {
    std::ofstream os(path);
    if (!os) {
        diag << "error: cannot open " << path.string() << " for writing\n";
        return kExitIo;
    }
    writer(os);
    os.flush();
    if (!os) {
        diag << "error: failed while writing " << path.string() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

int ensure_output_dir(const std::filesystem::path& dir, std::ostream& diag) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        diag << "error: cannot create output directory " << dir.string() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

std::optional<Objective> checked_objective(const ExperimentSpec& spec, std::ostream& diag) {
    auto obj = Objective::by_name(spec.objective);
    if (!obj) diag << "error: unknown objective '" << spec.objective << "'\n";
    return obj;
}

int validate_spec(const ExperimentSpec& spec, std::ostream& diag) {
    if (spec.replicates < 1) {
        diag << "error: replicates must be at least 1\n";
        return kExitConfig;
    }
    const bool wants_fairga =
        spec.algorithm == Algorithm::FairGa || spec.algorithm == Algorithm::Both;
    const auto err = wants_fairga ? validate_config(spec.config)
                                  : validate_baseline_config(spec.config);
    if (err) {
        diag << "error: invalid config: " << to_string(*err) << '\n';
        return kExitConfig;
    }
    return kExitOk;
}

RunTrace run_one(Algorithm algo, const ExperimentSpec& spec, const Objective& obj,
                 std::uint64_t seed) {
    auto cfg = spec.config;
    cfg.rng_seed = seed;
    return algo == Algorithm::FairGa ? run_fairga(cfg, obj) : run_baseline_ga(cfg, obj);
}

// Median treating missing values as +infinity: "n/a" once half the
// replicates never reach the threshold.
std::string median_or_na(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const double m = quantile_sorted(values, 0.5);
    return std::isfinite(m) ? format_double(m) : std::string("n/a");
}

} // namespace

int run(const ExperimentSpec& spec, std::ostream& diag) {
    const auto obj = checked_objective(spec, diag);
    if (!obj) return kExitConfig;
    if (const int rc = validate_spec(spec, diag)) return rc;
    if (const int rc = ensure_output_dir(spec.output_dir, diag)) return rc;

    std::vector<Algorithm> selection;
    if (spec.algorithm != Algorithm::Ga) selection.push_back(Algorithm::FairGa);
    if (spec.algorithm != Algorithm::FairGa) selection.push_back(Algorithm::Ga);

    for (const Algorithm algo : selection) {
        std::vector<RunTrace> traces;
        traces.reserve(static_cast<std::size_t>(spec.replicates));
        for (int i = 0; i < spec.replicates; ++i) {
            const std::uint64_t seed = spec.seed_base + static_cast<std::uint64_t>(i);
            traces.push_back(run_one(algo, spec, *obj, seed));
            const auto path = spec.output_dir / trace_filename(algo, spec.objective, seed);
            if (const int rc = write_file(
                    path, [&traces](std::ostream& os) { write_trace_csv(os, traces.back()); },
                    diag))
                return rc;
        }
        const auto path = spec.output_dir / summary_filename(algo, spec.objective);
        if (const int rc = write_file(
                path, [&traces](std::ostream& os) { write_summary_csv(os, traces); }, diag))
            return rc;
    }
    return kExitOk;
}

int compare(const ExperimentSpec& spec, std::ostream& out, std::ostream& diag) {
    if (spec.algorithm != Algorithm::Both) {
        diag << "error: compare requires algorithm 'both'\n";
        return kExitConfig;
    }
    if (!(spec.threshold > 0.0)) {
        diag << "error: threshold must be positive\n";
        return kExitConfig;
    }
    const auto obj = checked_objective(spec, diag);
    if (!obj) return kExitConfig;
    if (const int rc = validate_spec(spec, diag)) return rc;
    if (const int rc = ensure_output_dir(spec.output_dir, diag)) return rc;
    if (!obj->known_optimum()) {
        diag << "error: objective has no known optimum to compare against\n";
        return kExitConfig;
    }
    const double optimum = *obj->known_optimum();

    struct Outcome {
        std::uint64_t seed = 0;
        std::optional<int> iterations;
        std::optional<std::uint64_t> au;
        double final_best = 0.0;
    };
    const auto outcome_of = [&](const RunTrace& trace, std::uint64_t seed) {
        Outcome o;
        o.seed = seed;
        o.final_best = trace.rows.back().best_fitness;
        for (const auto& row : trace.rows) {
            if (reached_optimum(row.best_fitness, optimum, spec.threshold)) {
                o.iterations = row.iteration;
                o.au = row.cum_au;
                break;
            }
        }
        return o;
    };

    std::vector<Outcome> outcomes[2]; // [0] fairga, [1] ga
    for (int i = 0; i < spec.replicates; ++i) {
        const std::uint64_t seed = spec.seed_base + static_cast<std::uint64_t>(i);
        outcomes[0].push_back(outcome_of(run_one(Algorithm::FairGa, spec, *obj, seed), seed));
        outcomes[1].push_back(outcome_of(run_one(Algorithm::Ga, spec, *obj, seed), seed));
    }

    const Algorithm algos[2] = {Algorithm::FairGa, Algorithm::Ga};
    const auto write_rows = [&](std::ostream& os) {
        os << "algorithm,seed,iterations_to_threshold,au_to_threshold,final_best\n";
        for (int a = 0; a < 2; ++a) {
            for (const auto& o : outcomes[a]) {
                os << to_string(algos[a]) << ',' << o.seed << ',';
                if (o.iterations) os << *o.iterations;
                else os << "n/a";
                os << ',';
                if (o.au) os << *o.au;
                else os << "n/a";
                os << ',' << format_double(o.final_best) << '\n';
            }
        }
    };

    const double tol = spec.threshold * (1.0 + std::abs(optimum));
    const auto write_report = [&](std::ostream& os) {
        os << "objective: " << spec.objective << "\n"
           << "replicates: " << spec.replicates << "  seed base: " << spec.seed_base << "\n"
           << "threshold: |best - (" << format_double(optimum) << ")| <= " << format_double(tol)
           << "  (relative " << format_double(spec.threshold) << ")\n\n";
        os << std::left << std::setw(10) << "algorithm" << std::right << std::setw(18)
           << "median_iterations" << std::setw(12) << "median_au" << std::setw(20)
           << "median_final_best" << std::setw(10) << "reached" << '\n';
        for (int a = 0; a < 2; ++a) {
            constexpr double inf = std::numeric_limits<double>::infinity();
            std::vector<double> iters, au, final_best;
            int reached = 0;
            for (const auto& o : outcomes[a]) {
                iters.push_back(o.iterations ? static_cast<double>(*o.iterations) : inf);
                au.push_back(o.au ? static_cast<double>(*o.au) : inf);
                final_best.push_back(o.final_best);
                if (o.iterations) ++reached;
            }
            std::sort(final_best.begin(), final_best.end());
            os << std::left << std::setw(10) << to_string(algos[a]) << std::right << std::setw(18)
               << median_or_na(std::move(iters)) << std::setw(12) << median_or_na(std::move(au))
               << std::setw(20) << format_double(quantile_sorted(final_best, 0.5)) << std::setw(10)
               << (std::to_string(reached) + "/" + std::to_string(spec.replicates)) << '\n';
        }
    };

    const auto csv_path = spec.output_dir / ("compare_" + spec.objective + ".csv");
    if (const int rc = write_file(csv_path, write_rows, diag)) return rc;
    const auto txt_path = spec.output_dir / ("compare_" + spec.objective + ".txt");
    if (const int rc = write_file(txt_path, write_report, diag)) return rc;
    write_report(out);
    return kExitOk;
}

int sustainability(const FlowModelParams& params, bool as_csv, std::ostream& out,
                   std::ostream& diag) {
    if (const auto err = validate(params)) {
        diag << "error: invalid parameters: " << to_string(*err) << '\n';
        return kExitConfig;
    }
    const ScenarioReport report = compare_scenarios(params);

    if (as_csv) {
        out << "quantity,baseline,extended\n"
            << "extraction_rate," << format_double(report.extraction_baseline) << ','
            << format_double(report.extraction_extended) << '\n'
            << "returned_rate," << format_double(report.returned_baseline) << ','
            << format_double(report.returned_extended) << '\n'
            << "lifetime_extension_factor,1," << format_double(report.reduction_factor) << '\n';
        return kExitOk;
    }

    const auto two = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };
    out << "resource flow per unit time" << '\n'
        << std::left << std::setw(34) << "  rate" << std::right << std::setw(10) << "baseline"
        << std::setw(10) << "extended" << '\n'
        << std::left << std::setw(34) << "  extraction (virgin resource)" << std::right
        << std::setw(10) << two(report.extraction_baseline) << std::setw(10)
        << two(report.extraction_extended) << '\n'
        << std::left << std::setw(34) << "  returned (recovered resource)" << std::right
        << std::setw(10) << two(report.returned_baseline) << std::setw(10)
        << two(report.returned_extended) << '\n'
        << "extraction reduction factor: " << two(report.reduction_factor) << '\n';
    return kExitOk;
}

} // namespace cli

} // namespace fairga
