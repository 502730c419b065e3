#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fairga/chromosome.hpp"
#include "fairga/config.hpp"
#include "fairga/objective.hpp"
#include "fairga/population.hpp"
#include "fairga/random.hpp"

namespace fairga {

/// Knobs of the operator suite. Crossover and mutation rates come from the
/// run config; the remaining values are the defaults used everywhere.
struct OperatorParams {
    double crossover_rate = 0.8;
    double mutation_rate = 0.1;           ///< per-chromosome gate
    double gene_mutation_rate = 1.0;      ///< per-gene gate once the chromosome gate fires
    double mutation_sigma_fraction = 0.1; ///< Gaussian sigma as a fraction of box width
    int tournament_size = 2;
    int elitism_count = 1;                ///< set to 0 to disable elitism

    /// Rates copied from the config, everything else at defaults.
    static OperatorParams from_config(const FairGaConfig& cfg);

    bool operator==(const OperatorParams&) const = default;
};

/// Monotonic id dispenser; each run owns one, so ids are 0,1,2,... in
/// creation order.
struct IdSequence {
    std::uint64_t next = 0;
    std::uint64_t operator()() { return next_value(); }
    std::uint64_t next_value() { return next++; }
};

/// Fresh chromosome with genes drawn uniformly inside the objective's box,
/// age 0, created_at = now, fitness evaluated through the counter.
Chromosome seed_chromosome(RandomSource& rng, const Objective& obj, EvalCounter& counter,
                           int now, IdSequence& ids);

/// Indices of the `count` best members: lowest fitness first, ties broken
/// toward the smaller id. Returns fewer when the population is smaller.
std::vector<std::size_t> best_indices(const Population& pop, int count);

/// Two independent tournaments over uniformly sampled distinct members;
/// the winners may coincide. The tournament size is clamped to the current
/// population size, so a population of one returns that member twice.
/// Throws EmptyPopulationError on an empty population.
std::pair<std::size_t, std::size_t> select_parents(const Population& pop, RandomSource& rng,
                                                   const OperatorParams& params);

/// Deterministic core of crossover: children lambda*a + (1-lambda)*b and
/// (1-lambda)*a + lambda*b, elementwise. Convexity keeps children inside
/// any box containing both parents.
std::pair<std::vector<double>, std::vector<double>>
blend(std::span<const double> a, std::span<const double> b, double lambda);

/// With probability crossover_rate, recombines the parents gene by gene:
/// each coordinate is exchanged intact half the time and arithmetically
/// blended (its own lambda drawn uniformly from [0, 1]) the other half, so
/// children stay inside the per-gene parent interval. With probability
/// 1 - crossover_rate the children are exact parental copies. Throws
/// DimensionMismatchError when the parents' gene counts differ.
std::pair<std::vector<double>, std::vector<double>>
crossover(const Chromosome& a, const Chromosome& b, RandomSource& rng,
          const OperatorParams& params);

/// With probability mutation_rate, perturbs genes by Gaussian draws with
/// sigma = mutation_sigma_fraction * (high - low) per dimension, clamped to
/// the box; otherwise returns the genes unchanged.
std::vector<double> mutate(std::vector<double> genes, RandomSource& rng, const Objective& obj,
                           const OperatorParams& params);

/// Picks at most s_dispose members to discard: only members with
/// age >= l_min are eligible, the elitism_count best of the whole
/// population are protected, and eligible members are taken worst fitness
/// first, ties broken toward the larger age and then the smaller id.
/// Returns an empty vector when nobody is eligible.
std::vector<std::uint64_t> select_discards(const Population& pop, int l_min, int s_dispose,
                                           int elitism_count);

} // namespace fairga
