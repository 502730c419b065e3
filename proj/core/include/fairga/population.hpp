#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fairga/chromosome.hpp"

namespace fairga {

/// The live chromosome collection. Size never exceeds the capacity fixed at
/// construction, ids are unique, and member order is stable: survivors keep
/// their relative order and new members are appended.
class Population {
public:
    explicit Population(int capacity);

    int capacity() const { return capacity_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool full() const { return size() == capacity_; }

    const std::vector<Chromosome>& members() const { return members_; }
    const Chromosome& operator[](std::size_t i) const { return members_[i]; }

    /// Appends a member. Throws CapacityExceededError when full and
    /// InternalInvariantViolation on a duplicate id.
    void add(Chromosome c);

    /// Removes every member whose id is listed; survivor order is preserved.
    /// Returns the number of members removed.
    int remove_ids(const std::vector<std::uint64_t>& ids);

    /// One aging step: every member's age grows by one.
    void age_all();

    /// Lowest fitness among members. Population must not be empty.
    double best_fitness() const;

    /// Arithmetic mean of member fitness. Population must not be empty.
    double mean_fitness() const;

private:
    int capacity_;
    std::vector<Chromosome> members_;
};

} // namespace fairga
