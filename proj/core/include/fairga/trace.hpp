#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace fairga {

/// Phases of a run. Baseline GA traces tag every row Core.
enum class Stage { Rampup, Core, Exit };

std::string_view to_string(Stage s);

/// Stage boundaries as 1-based iteration numbers, inclusive: rows
/// 1..rampup_end are ramp-up, rampup_end+1..core_end core, and
/// core_end+1..run_end exit. rampup_end <= core_end <= run_end always;
/// the exit stage is empty when the minimum lifetime is zero.
struct StageSchedule {
    int rampup_end = 0;
    int core_end = 0;
    int run_end = 0;

    bool operator==(const StageSchedule&) const = default;
};

/// One per-iteration record. cum_au uses whole-population accounting: each
/// ramp-up or core iteration charges one unit per member present, and exit
/// iterations charge nothing. This is an accounting convention, deliberately
/// independent of how many objective evaluations actually ran.
struct TraceRow {
    int iteration = 0;
    Stage stage = Stage::Core;
    int pop_size = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    std::uint64_t cum_au = 0;

    bool operator==(const TraceRow&) const = default;
};

/// Custody record for one chromosome: when it entered the population and,
/// if discarded, when. Entries still alive at run end carry no discard
/// iteration. discarded_at - created_at is the realized lifetime.
struct LedgerEntry {
    std::uint64_t id = 0;
    int created_at = 0;
    std::optional<int> discarded_at;

    bool operator==(const LedgerEntry&) const = default;
};

/// Complete record of a run. Ledger entries are stored in creation order,
/// so ledger[id].id == id. `evaluations` counts real objective calls (each
/// chromosome is evaluated exactly once), as opposed to the rows' cum_au.
struct RunTrace {
    std::vector<TraceRow> rows;
    std::vector<LedgerEntry> ledger;
    StageSchedule schedule;
    std::uint64_t evaluations = 0;

    bool operator==(const RunTrace&) const = default;
};

/// Ids of ledger entries discarded before living l_min iterations.
/// Empty for every run that honors the lifetime guarantee.
std::vector<std::uint64_t> fairness_violations(const RunTrace& trace, int l_min);

} // namespace fairga
