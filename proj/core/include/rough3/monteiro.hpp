#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rough3/info_table.hpp"
#include "rough3/object_set.hpp"
#include "rough3/report.hpp"
#include "rough3/rough_algebra.hpp"

namespace rough3 {

class FiniteAlgebra;

// Three membership grades, ordered zero < half < one.
enum class ThreeValue { zero, half, one };

ThreeValue tv_min(ThreeValue a, ThreeValue b);
ThreeValue tv_max(ThreeValue a, ThreeValue b);
ThreeValue tv_complement(ThreeValue a);
std::string to_string(ThreeValue v);

// Set operations on arbitrary subsets that descend to meet and join on
// rough equivalence classes.
ObjectSet cap_dot(const Partition& p, const ObjectSet& a, const ObjectSet& b);
ObjectSet uplus(const Partition& p, const ObjectSet& a, const ObjectSet& b);

// Two subsets are equivalent when they share lower and upper approximations.
bool congruent(const Partition& p, const ObjectSet& a, const ObjectSet& b);

struct CongruenceClass {
  RoughSet signature;             // shared (lower, upper) pair of every member
  std::vector<ObjectSet> members; // all subsets in the class, in subset order
};

// All equivalence classes, ordered by the first subset that lands in each.
std::vector<CongruenceClass> congruence_classes(const PartitionPtr& p,
                                                std::size_t max_universe = kDefaultMaxUniverse);

// The quotient of the powerset by the equivalence, carrying cap_dot, uplus,
// complement, and upper approximation down to class representatives.
FiniteAlgebra quotient_algebra(const PartitionPtr& p,
                               std::size_t max_universe = kDefaultMaxUniverse);

// Checks that the equivalence is compatible with each quotient operation:
// the class of the result never depends on the chosen representatives.
VerificationReport verify_congruence(const PartitionPtr& p,
                                     std::size_t max_universe = kDefaultMaxUniverse);

// Checks how approximations distribute over cap_dot and uplus.
VerificationReport verify_distribution_identities(const PartitionPtr& p,
                                                  std::size_t max_universe = kDefaultMaxUniverse);

// Checks that the quotient algebra and the algebra of rough sets coincide
// carrier-for-carrier and table-for-table.
VerificationReport verify_quotient_isomorphism(const PartitionPtr& p,
                                               std::size_t max_universe = kDefaultMaxUniverse);

// Membership grade of one object in a subset: one inside the lower
// approximation, half in the boundary, zero outside the upper approximation.
ThreeValue membership(const Partition& p, const ObjectSet& a, const std::string& object_id);

// Grades for every object of the universe, in universe order.
std::vector<ThreeValue> membership_grades(const Partition& p, const ObjectSet& a);

// Checks that grades extend through the quotient operations pointwise:
// max for uplus, min for cap_dot, complement for set complement.
VerificationReport verify_membership_extension(const PartitionPtr& p,
                                               std::size_t max_universe = kDefaultMaxUniverse);

// Checks that passing to rough sets turns cap_dot into meet and uplus into join.
VerificationReport verify_rough_monteiro_bridge(const PartitionPtr& p,
                                                std::size_t max_universe = kDefaultMaxUniverse);

}  // namespace rough3
