#include "fairga/operators.hpp"

#include <algorithm>
#include <numeric>

#include "fairga/errors.hpp"

namespace fairga {

OperatorParams OperatorParams::from_config(const FairGaConfig& cfg) {
    OperatorParams params;
    params.crossover_rate = cfg.crossover_rate;
    params.mutation_rate = cfg.mutation_rate;
    return params;
}

Chromosome seed_chromosome(RandomSource& rng, const Objective& obj, EvalCounter& counter,
                           int now, IdSequence& ids) {
    Chromosome c;
    c.id = ids();
    c.genes.reserve(static_cast<std::size_t>(obj.dimension()));
    for (int d = 0; d < obj.dimension(); ++d) {
        const auto& b = obj.bounds(static_cast<std::size_t>(d));
        c.genes.push_back(rng.uniform(b.low, b.high));
    }
    c.created_at = now;
    c.age = 0;
    c.fitness = counted_eval(obj, counter, c.genes);
    return c;
}

std::vector<std::size_t> best_indices(const Population& pop, int count) {
    const auto n = static_cast<std::size_t>(pop.size());
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&pop](std::size_t a, std::size_t b) {
        if (pop[a].fitness != pop[b].fitness) return pop[a].fitness < pop[b].fitness;
        return pop[a].id < pop[b].id;
    });
    const auto keep = std::min(n, static_cast<std::size_t>(std::max(count, 0)));
    order.resize(keep);
    return order;
}

namespace {

// One tournament: sample k distinct members (partial Fisher-Yates, exactly
// k index draws), return the fittest, ties toward the smaller id.
std::size_t tournament(const Population& pop, RandomSource& rng, int k) {
    const auto n = static_cast<std::size_t>(pop.size());
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::size_t best = n; // sentinel: no candidate seen yet
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
        const std::size_t j = i + rng.index(n - i);
        std::swap(idx[i], idx[j]);
        const std::size_t cand = idx[i];
        if (best == n || pop[cand].fitness < pop[best].fitness ||
            (pop[cand].fitness == pop[best].fitness && pop[cand].id < pop[best].id))
            best = cand;
    }
    return best;
}

} // namespace

std::pair<std::size_t, std::size_t> select_parents(const Population& pop, RandomSource& rng,
                                                   const OperatorParams& params) {
    if (pop.empty()) throw EmptyPopulationError("parent selection on an empty population");
    const int n = pop.size();
    if (n == 1) return {0, 0};
    const int k = std::clamp(params.tournament_size, 1, n);
    const std::size_t first = tournament(pop, rng, k);
    const std::size_t second = tournament(pop, rng, k);
    return {first, second};
}

std::pair<std::vector<double>, std::vector<double>>
blend(std::span<const double> a, std::span<const double> b, double lambda) {
    std::vector<double> c1(a.size());
    std::vector<double> c2(a.size());
    for (std::size_t d = 0; d < a.size(); ++d) {
        // rounding can push a convex combination an ulp past the parents'
        // interval, so pin it back; convexity is a hard contract here
        const double lo = std::min(a[d], b[d]);
        const double hi = std::max(a[d], b[d]);
        c1[d] = std::clamp(lambda * a[d] + (1.0 - lambda) * b[d], lo, hi);
        c2[d] = std::clamp((1.0 - lambda) * a[d] + lambda * b[d], lo, hi);
    }
    return {std::move(c1), std::move(c2)};
}

std::pair<std::vector<double>, std::vector<double>>
crossover(const Chromosome& a, const Chromosome& b, RandomSource& rng,
          const OperatorParams& params) {
    if (a.genes.size() != b.genes.size())
        throw DimensionMismatchError("crossover parents have different gene counts");
    if (!rng.chance(params.crossover_rate)) return {a.genes, b.genes};
    // Per-gene recombination: each coordinate is either exchanged intact
    // (half the time) or arithmetically blended with its own lambda. A single
    // whole-vector blend keeps children on the parent-to-parent segment, which
    // shrinks the population's spread every generation and cannot combine
    // coordinates discovered by different lineages; gene exchange is what lets
    // two half-good solutions produce a fully good one on separable landscapes.
    std::vector<double> c1(a.genes.size());
    std::vector<double> c2(a.genes.size());
    for (std::size_t d = 0; d < a.genes.size(); ++d) {
        double lambda;
        if (rng.chance(0.5))
            lambda = rng.chance(0.5) ? 1.0 : 0.0; // exchange the gene intact
        else
            lambda = rng.uniform(0.0, 1.0); // blend
        // rounding can push a convex combination an ulp past the parents'
        // interval, so pin it back; convexity is a hard contract here
        const double lo = std::min(a.genes[d], b.genes[d]);
        const double hi = std::max(a.genes[d], b.genes[d]);
        c1[d] = std::clamp(lambda * a.genes[d] + (1.0 - lambda) * b.genes[d], lo, hi);
        c2[d] = std::clamp((1.0 - lambda) * a.genes[d] + lambda * b.genes[d], lo, hi);
    }
    return {std::move(c1), std::move(c2)};
}

std::vector<double> mutate(std::vector<double> genes, RandomSource& rng, const Objective& obj,
                           const OperatorParams& params) {
    if (!rng.chance(params.mutation_rate)) return genes;
    for (std::size_t d = 0; d < genes.size(); ++d) {
        if (!rng.chance(params.gene_mutation_rate)) continue;
        const auto& b = obj.bounds(d);
        const double sigma = params.mutation_sigma_fraction * (b.high - b.low);
        genes[d] = std::clamp(genes[d] + rng.gaussian(0.0, sigma), b.low, b.high);
    }
    return genes;
}

std::vector<std::uint64_t> select_discards(const Population& pop, int l_min, int s_dispose,
                                           int elitism_count) {
    if (s_dispose < 1 || pop.empty()) return {};

    const auto n = static_cast<std::size_t>(pop.size());
    std::vector<bool> protected_(n, false);
    for (const std::size_t i : best_indices(pop, elitism_count)) protected_[i] = true;

    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < n; ++i)
        if (!protected_[i] && pop[i].age >= l_min) eligible.push_back(i);

    // worst fitness first; ties toward the larger age, then the smaller id
    std::sort(eligible.begin(), eligible.end(), [&pop](std::size_t a, std::size_t b) {
        if (pop[a].fitness != pop[b].fitness) return pop[a].fitness > pop[b].fitness;
        if (pop[a].age != pop[b].age) return pop[a].age > pop[b].age;
        return pop[a].id < pop[b].id;
    });
    if (eligible.size() > static_cast<std::size_t>(s_dispose))
        eligible.resize(static_cast<std::size_t>(s_dispose));

    std::vector<std::uint64_t> ids;
    ids.reserve(eligible.size());
    for (const std::size_t i : eligible) ids.push_back(pop[i].id);
    return ids;
}

} // namespace fairga
