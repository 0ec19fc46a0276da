#pragma once

#include <cstddef>
#include <vector>

#include "rough3/info_table.hpp"
#include "rough3/object_set.hpp"
#include "rough3/report.hpp"

namespace rough3 {

// Default bound for the exhaustive monadic-operator check: quantifying over
// all pairs of subsets is 4^n, which stays comfortable up to 12 objects.
inline constexpr std::size_t kDefaultMonadicBound = 12;

// Upper approximation: union of the blocks that meet `a`.
ObjectSet upper(const Partition& p, const ObjectSet& a);
// Lower approximation: union of the blocks contained in `a`.
ObjectSet lower(const Partition& p, const ObjectSet& a);

// True when `a` is a union of blocks, i.e. a fixed point of both operators.
bool is_closed(const Partition& p, const ObjectSet& a);

// All unions of blocks, enumerated by block-subset mask in ascending order
// (2^block_count sets).  Refuses partitions with more than 20 blocks.
std::vector<ObjectSet> closed_elements(const Partition& p);

// Exhaustively verifies that the upper approximation is a monadic possibility
// operator over the powerset Boolean algebra:
//   M0: M(empty) = empty
//   M1: A <= MA
//   M2: M(A & MB) = MA & MB
// together with the duality L = ~M~.  Quantifies over every subset (pair);
// throws InputError when the universe exceeds `max_universe`.
VerificationReport check_monadic_axioms(const Partition& p,
                                        std::size_t max_universe = kDefaultMonadicBound);

}  // namespace rough3
