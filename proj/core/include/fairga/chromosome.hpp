#pragma once

#include <cstdint>
#include <vector>

namespace fairga {

/// One candidate solution: a real-valued gene vector plus the bookkeeping
/// needed for the lifetime guarantee. Identity is the id, never the gene
/// content; a chromosome whose genes reappear later is a new individual.
struct Chromosome {
    std::uint64_t id = 0;
    std::vector<double> genes;
    int created_at = 0;   ///< iteration at which it entered the population
    int age = 0;          ///< aging steps survived since creation
    double fitness = 0.0; ///< objective value of `genes`, computed once

    bool operator==(const Chromosome&) const = default;
};

} // namespace fairga
