#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "rough3/info_table.hpp"

namespace rough3 {

// Universe with object ids "1", "2", ..., "n".
UniversePtr numbered_universe(std::size_t n);

// Every partition of the universe, enumerated through restricted growth
// strings in lexicographic order. Meant for small n (Bell numbers grow fast).
std::vector<Partition> all_partitions(const UniversePtr& universe);

// A random partition: each object draws a label uniformly, and the labels
// are then canonicalized by first occurrence.
Partition random_partition(const UniversePtr& universe, std::mt19937_64& rng);

}  // namespace rough3
