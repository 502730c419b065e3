#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairga/config.hpp"
#include "fairga/sustainability.hpp"
#include "fairga/trace.hpp"

namespace fairga {

enum class Algorithm { FairGa, Ga, Both };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> algorithm_by_name(std::string_view name);

/// A reproducible batch of runs. Replicate i uses seed seed_base + i, so a
/// spec pins every random draw of the experiment.
struct ExperimentSpec {
    Algorithm algorithm = Algorithm::FairGa;
    std::string objective = "schwefel";
    FairGaConfig config;
    int replicates = 1;
    std::uint64_t seed_base = 42;
    std::filesystem::path output_dir = ".";
    double threshold = 0.01; ///< relative tolerance of the reached-optimum test
};

/// Header shared by every per-replicate trace CSV.
inline constexpr std::string_view kTraceCsvHeader =
    "iteration,stage,pop_size,best_fitness,mean_fitness,cum_au";

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

/// Linear-interpolation quantile of an ascending-sorted, non-empty vector.
double quantile_sorted(const std::vector<double>& sorted, double q);

/// |value - optimum| <= threshold * (1 + |optimum|).
bool reached_optimum(double value, double optimum, double threshold);

/// Name of a per-replicate trace file: <algo>_<objective>_<seed>.csv.
std::string trace_filename(Algorithm algo, std::string_view objective, std::uint64_t seed);

/// Name of the aggregate file: <algo>_<objective>_summary.csv.
std::string summary_filename(Algorithm algo, std::string_view objective);

/// One row per iteration under kTraceCsvHeader.
void write_trace_csv(std::ostream& os, const RunTrace& trace);

/// Per-iteration median and interquartile best fitness across replicates,
/// with header iteration,median_best,q1_best,q3_best. All traces must have
/// the same number of rows.
void write_summary_csv(std::ostream& os, const std::vector<RunTrace>& traces);

namespace cli {

inline constexpr int kExitOk = 0;     ///< success
inline constexpr int kExitConfig = 1; ///< invalid config, flag value, or parameters
inline constexpr int kExitIo = 2;     ///< unwritable output path or failed write

/// Runs the selected engine(s) for every replicate and writes one trace CSV
/// per run plus a summary CSV per engine into spec.output_dir. Identical
/// specs produce byte-identical files. Diagnostics go to `diag`.
int run(const ExperimentSpec& spec, std::ostream& diag);

/// Runs both engines on identical seeds, writes compare_<objective>.csv and
/// compare_<objective>.txt into spec.output_dir, and prints the text report
/// to `out`. Requires algorithm == Both.
int compare(const ExperimentSpec& spec, std::ostream& out, std::ostream& diag);

/// Prints the two-scenario resource-flow report to `out`: an aligned text
/// table with two-decimal presentation, or full-precision CSV when as_csv.
int sustainability(const FlowModelParams& params, bool as_csv, std::ostream& out,
                   std::ostream& diag);

} // namespace cli

} // namespace fairga
