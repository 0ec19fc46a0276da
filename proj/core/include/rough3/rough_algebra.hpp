#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rough3/approximation.hpp"
#include "rough3/info_table.hpp"
#include "rough3/object_set.hpp"
#include "rough3/report.hpp"

namespace rough3 {

// Default bound for the enumerations that walk every subset of the universe
// (rough-set enumeration, quotient construction, exhaustive law checks).
inline constexpr std::size_t kDefaultMaxUniverse = 6;

// The pair (lower approximation, upper approximation) of some subset of the
// universe, tied to its approximation space.  Instances can only be built
// through the validating factories below, so every RoughSet satisfies:
// both components closed, lower <= upper, and every block inside
// upper - lower has at least two elements (the pair is realized by an
// actual subset).
class RoughSet {
 public:
  const ObjectSet& lower_part() const { return lower_; }
  const ObjectSet& upper_part() const { return upper_; }
  const PartitionPtr& space() const { return space_; }

  friend bool operator==(const RoughSet& a, const RoughSet& b);
  friend bool operator!=(const RoughSet& a, const RoughSet& b) { return !(a == b); }

  friend RoughSet rough_set(const PartitionPtr& p, ObjectSet lower, ObjectSet upper);

 private:
  RoughSet(PartitionPtr space, ObjectSet lower, ObjectSet upper);

  ObjectSet lower_;
  ObjectSet upper_;
  PartitionPtr space_;
};

// Validating factory: throws InputError unless (lower, upper) is the
// approximation pair of some subset of the universe.
RoughSet rough_set(const PartitionPtr& p, ObjectSet lower, ObjectSet upper);

// Canonical "{lower}|{upper}" label, used as the element name wherever rough
// sets become elements of a finite algebra.
std::string rough_label(const RoughSet& a);
std::string pair_label(const ObjectSet& first, const ObjectSet& second);

// The rough set of an explicit subset.
RoughSet rough_of(const PartitionPtr& p, const ObjectSet& x);

// Lattice operations (componentwise) and the three-valued operators.
RoughSet meet(const RoughSet& a, const RoughSet& b);
RoughSet join(const RoughSet& a, const RoughSet& b);
// De Morgan negation: swaps and complements the components.
RoughSet negation(const RoughSet& a);
// Possibility: collapses the pair onto its upper part.
RoughSet possibility(const RoughSet& a);
// Necessity: collapses the pair onto its lower part; equals ~possibility(~a).
RoughSet necessity(const RoughSet& a);
// Relative pseudocomplement; satisfies meet(a,c) <= b iff c <= implication.
RoughSet heyting_implication(const RoughSet& a, const RoughSet& b);

bool rough_leq(const RoughSet& a, const RoughSet& b);
RoughSet rough_zero(const PartitionPtr& p);
RoughSet rough_one(const PartitionPtr& p);

// The centre (fixed point of negation) exists iff every block has at least
// two elements; otherwise there is no centre and nullopt is returned.
std::optional<RoughSet> center_of_rough_sets(const PartitionPtr& p);

// Every distinct rough set of the space, in first-occurrence order over the
// subsets of the universe enumerated by ascending bit mask.
std::vector<RoughSet> enumerate_rough_sets(const PartitionPtr& p,
                                           std::size_t max_universe = kDefaultMaxUniverse);

// A pair of closed sets with first <= second; the ambient algebra of all
// such pairs over the space's Boolean algebra of closed sets.  Unlike a
// RoughSet, a MoisilPair need not be realized by any subset.
class MoisilPair {
 public:
  const ObjectSet& first() const { return first_; }
  const ObjectSet& second() const { return second_; }
  const PartitionPtr& space() const { return space_; }

  friend bool operator==(const MoisilPair& a, const MoisilPair& b);
  friend bool operator!=(const MoisilPair& a, const MoisilPair& b) { return !(a == b); }

  friend MoisilPair moisil_pair(const PartitionPtr& p, ObjectSet first, ObjectSet second);

 private:
  MoisilPair(PartitionPtr space, ObjectSet first, ObjectSet second);

  ObjectSet first_;
  ObjectSet second_;
  PartitionPtr space_;
};

// Validating factory: both components must be closed and first <= second.
MoisilPair moisil_pair(const PartitionPtr& p, ObjectSet first, ObjectSet second);

// All pairs of closed sets with first <= second, ordered lexicographically
// by (first, second) position in the closed_elements enumeration.
std::vector<MoisilPair> moisil_pairs(const PartitionPtr& p,
                                     std::size_t max_universe = kDefaultMaxUniverse);

MoisilPair moisil_meet(const MoisilPair& a, const MoisilPair& b);
MoisilPair moisil_join(const MoisilPair& a, const MoisilPair& b);
MoisilPair moisil_negation(const MoisilPair& a);
MoisilPair moisil_possibility(const MoisilPair& a);
MoisilPair moisil_necessity(const MoisilPair& a);
bool moisil_leq(const MoisilPair& a, const MoisilPair& b);
// The pair (empty, universe); always present, unlike the rough-set centre.
MoisilPair moisil_center(const PartitionPtr& p);
MoisilPair to_moisil_pair(const RoughSet& a);

// Characterization route: (first, second) is the approximation pair of some
// subset iff every block inside second - first has at least two elements.
// Tests cross-check this against the brute-force oracle.
bool is_realizable(const PartitionPtr& p, const ObjectSet& first, const ObjectSet& second);
// A subset X with lower(X) = first and upper(X) = second, when one exists.
std::optional<ObjectSet> realize_witness(const PartitionPtr& p, const MoisilPair& pair);

// Exhaustive check that possibility and necessity images jointly determine
// every element, over the rough sets and over all Moisil pairs.
VerificationReport verify_determination(const PartitionPtr& p,
                                        std::size_t max_universe = kDefaultMaxUniverse);

// Exhaustive checks of the derived structure on the rough sets of the space:
// closure under the five operations, agreement with the ambient Moisil-pair
// operations, the Kleene law, Heyting residuation, and the centre law.
VerificationReport verify_algebra_laws(const PartitionPtr& p,
                                       std::size_t max_universe = kDefaultMaxUniverse);

}  // namespace rough3
