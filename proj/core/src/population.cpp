#include "fairga/population.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairga/errors.hpp"

namespace fairga {

Population::Population(int capacity) : capacity_(capacity) {
    if (capacity < 1) throw std::invalid_argument("population capacity must be positive");
    members_.reserve(static_cast<std::size_t>(capacity));
}

void Population::add(Chromosome c) {
    if (full()) throw CapacityExceededError("population is at capacity");
    for (const auto& m : members_)
        if (m.id == c.id) throw InternalInvariantViolation("duplicate chromosome id");
    members_.push_back(std::move(c));
}

int Population::remove_ids(const std::vector<std::uint64_t>& ids) {
    auto listed = [&ids](const Chromosome& c) {
        return std::find(ids.begin(), ids.end(), c.id) != ids.end();
    };
    const auto removed = std::erase_if(members_, listed);
    return static_cast<int>(removed);
}

void Population::age_all() {
    for (auto& m : members_) ++m.age;
}

double Population::best_fitness() const {
    if (empty()) throw EmptyPopulationError("best_fitness of empty population");
    const auto it = std::min_element(
        members_.begin(), members_.end(),
        [](const Chromosome& a, const Chromosome& b) { return a.fitness < b.fitness; });
    return it->fitness;
}

double Population::mean_fitness() const {
    if (empty()) throw EmptyPopulationError("mean_fitness of empty population");
    double sum = 0.0;
    for (const auto& m : members_) sum += m.fitness;
    return sum / static_cast<double>(members_.size());
}

} // namespace fairga
