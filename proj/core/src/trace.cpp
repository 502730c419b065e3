#include "fairga/trace.hpp"

namespace fairga {

std::string_view to_string(Stage s) {
    switch (s) {
        case Stage::Rampup: return "rampup";
        case Stage::Core: return "core";
        case Stage::Exit: return "exit";
    }
    return "unknown";
}

std::vector<std::uint64_t> fairness_violations(const RunTrace& trace, int l_min) {
    std::vector<std::uint64_t> violations;
    for (const auto& entry : trace.ledger) {
        if (!entry.discarded_at) continue;
        if (*entry.discarded_at - entry.created_at < l_min) violations.push_back(entry.id);
    }
    return violations;
}

} // namespace fairga
