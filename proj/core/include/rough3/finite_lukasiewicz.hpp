#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rough3/info_table.hpp"
#include "rough3/object_set.hpp"
#include "rough3/report.hpp"
#include "rough3/rough_algebra.hpp"

namespace rough3 {

// Default bound for prime-filter enumeration, which walks every subset of
// the carrier (2^n masks).  16 covers every algebra imported from a
// four-object space.
inline constexpr std::size_t kDefaultMaxElements = 16;

// A finite algebra (L, &, |, ~, nabla, 1) given by explicit operation
// tables over named elements.  Construction validates shape only; whether
// the tables satisfy the three-valued axioms is the job of check_axioms.
// Derived operators: 0 = ~1, delta x = ~nabla ~x, x <= y iff x & y = x.
class FiniteAlgebra {
 public:
  static FiniteAlgebra from_tables(std::vector<std::string> elements,
                                   std::vector<std::vector<int>> meet,
                                   std::vector<std::vector<int>> join,
                                   std::vector<int> neg,
                                   std::vector<int> nabla,
                                   int one);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(int x) const;
  // Index of a named element; throws InputError for unknown names.
  int index_of(const std::string& name) const;

  int meet(int x, int y) const { return meet_[check(x)][check(y)]; }
  int join(int x, int y) const { return join_[check(x)][check(y)]; }
  int neg(int x) const { return neg_[check(x)]; }
  int nabla(int x) const { return nabla_[check(x)]; }
  int delta(int x) const { return neg_[nabla_[neg_[check(x)]]]; }
  int one() const { return one_; }
  int zero() const { return zero_; }
  bool leq(int x, int y) const { return meet(x, y) == x; }

  const std::vector<std::vector<int>>& meet_table() const { return meet_; }
  const std::vector<std::vector<int>>& join_table() const { return join_; }
  const std::vector<int>& neg_table() const { return neg_; }
  const std::vector<int>& nabla_table() const { return nabla_; }

  // The fixed point of ~ when it exists (at most one in a three-valued
  // algebra that passes the axiom checks).
  std::optional<int> center() const;

 private:
  FiniteAlgebra() = default;
  int check(int x) const;

  std::vector<std::string> elements_;
  std::vector<std::vector<int>> meet_;
  std::vector<std::vector<int>> join_;
  std::vector<int> neg_;
  std::vector<int> nabla_;
  int one_ = 0;
  int zero_ = 0;
};

// The three-element chain 0 < c < 1 with ~c = c, nabla c = 1.
FiniteAlgebra three_chain();
// The two-element Boolean algebra; nabla is the identity.
FiniteAlgebra two_chain();
// Componentwise product; element names are "(a,b)".
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Exhaustive check of the bounded-distributive-lattice laws, the De Morgan
// involution, and the three characteristic three-valued conditions:
//   ~x | nabla x = 1
//   x & ~x = ~x & nabla x
//   nabla(x & y) = nabla x & nabla y
VerificationReport check_axioms(const FiniteAlgebra& a);

// Consequences that must follow from the axioms: nabla is additive,
// increasing and idempotent, and its fixed points are exactly the
// complemented elements.
VerificationReport derived_operator_checks(const FiniteAlgebra& a);

// An upward-closed, meet-closed proper subset containing 1 whose complement
// is closed under join.  Members are element indices in ascending order.
struct PrimeFilter {
  std::vector<int> members;

  bool contains(int x) const;
  friend bool operator==(const PrimeFilter& a, const PrimeFilter& b) {
    return a.members == b.members;
  }
};

// Brute-force enumeration over all subsets of the carrier, in ascending
// mask order.  Throws InputError when size() exceeds max_elements (or the
// hard cap of 20).
std::vector<PrimeFilter> prime_filters(const FiniteAlgebra& a,
                                       std::size_t max_elements = kDefaultMaxElements);

// The inclusion-reversing involution P -> complement of ~P.  Validates that
// the input is a prime filter of `a`.
PrimeFilter involution_g(const FiniteAlgebra& a, const PrimeFilter& p);

// The prime filters with their involution and comparability structure: the
// filters split into inclusion chains of one or two filters, each closed
// under g.  The chains are the blocks of a partition over a fresh universe
// of filter names "P0", "P1", ... in enumeration order.
struct FilterSpace {
  std::vector<PrimeFilter> filters;
  UniversePtr filter_universe;
  PartitionPtr space;
  std::vector<std::size_t> g;  // g[i] = index of the involution image
};

FilterSpace filter_space(const FiniteAlgebra& a,
                         std::size_t max_elements = kDefaultMaxElements);

// The comparability partition of the prime filters (the blocks are the
// inclusion chains).
Partition comparability_relation(const FiniteAlgebra& a,
                                 std::size_t max_elements = kDefaultMaxElements);

// Stone map: the set of prime filters containing x, as a subset of the
// filter universe.
ObjectSet stone_map(const FiniteAlgebra& a, int x, const FilterSpace& fs);

// The embedding of `a` into the rough sets of its filter space:
// h(x) = (L s(x), M s(x)).  `checks` certifies injectivity and preservation
// of the five operations.
struct Representation {
  FilterSpace space;
  std::vector<RoughSet> h;  // indexed like the algebra's elements
  VerificationReport checks;
};

// Requires an algebra that passes check_axioms; throws InputError otherwise.
Representation represent(const FiniteAlgebra& a,
                         std::size_t max_elements = kDefaultMaxElements);

// The Stone-map transfer identities and the two filter lemmas that drive
// the embedding, each checked over every element and filter.
VerificationReport verify_representation_identities(
    const FiniteAlgebra& a, std::size_t max_elements = kDefaultMaxElements);

// The algebra of all rough sets of a partition, with elements named by
// their "{lower}|{upper}" labels in enumeration order.
FiniteAlgebra import_rough_algebra(const PartitionPtr& p,
                                   std::size_t max_universe = kDefaultMaxUniverse);

// Table-level versions of the structural laws (determination, Kleene,
// residuation, centre law) for algebras supplied directly as tables.
VerificationReport verify_derived_structure(const FiniteAlgebra& a);

}  // namespace rough3
