#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "rough3/error.hpp"

namespace rough3 {

// An ordered universe of distinct object identifiers.  Universes are shared
// immutably by the sets, partitions and rough sets built over them; two
// universes are interchangeable iff they list the same identifiers in the
// same order.
class Universe {
 public:
  explicit Universe(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t index) const;
  std::size_t index_of(const std::string& id) const;  // throws InputError
  bool contains(const std::string& id) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.ids_ == b.ids_;
  }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> ids);
bool same_universe(const UniversePtr& a, const UniversePtr& b);
// Throws UniverseMismatchError unless a and b agree.
void require_same_universe(const UniversePtr& a, const UniversePtr& b);

// A subset of a fixed universe, stored as a bit vector in universe order.
// Value type: copying is cheap and all operations are pure.
class ObjectSet {
 public:
  explicit ObjectSet(UniversePtr universe);

  static ObjectSet empty_set(UniversePtr universe);
  static ObjectSet full_set(UniversePtr universe);
  // Builds a set from identifiers; unknown ids throw InputError.
  static ObjectSet of(UniversePtr universe, const std::vector<std::string>& ids);
  // Interprets bit i of `mask` as membership of universe element i.
  // Requires the universe to have at most 64 elements.
  static ObjectSet from_mask(UniversePtr universe, std::uint64_t mask);

  const UniversePtr& universe() const { return universe_; }
  std::size_t universe_size() const;

  bool contains(std::size_t index) const;
  bool contains_id(const std::string& id) const;
  void insert(std::size_t index);

  std::size_t count() const;
  bool is_empty() const;
  // Member identifiers in universe order.
  std::vector<std::string> members() const;
  // Inverse of from_mask; requires a universe of at most 64 elements.
  std::uint64_t mask() const;

  friend bool operator==(const ObjectSet& a, const ObjectSet& b);
  friend bool operator!=(const ObjectSet& a, const ObjectSet& b) { return !(a == b); }

  friend ObjectSet set_union(const ObjectSet& a, const ObjectSet& b);
  friend ObjectSet set_intersection(const ObjectSet& a, const ObjectSet& b);
  friend ObjectSet set_difference(const ObjectSet& a, const ObjectSet& b);
  friend ObjectSet complement(const ObjectSet& a);
  friend bool is_subset(const ObjectSet& a, const ObjectSet& b);
  friend bool are_disjoint(const ObjectSet& a, const ObjectSet& b);

 private:
  void trim();

  UniversePtr universe_;
  std::vector<std::uint64_t> words_;
};

// Compact "{id,id,...}" label with members in universe order; used for
// algebra element names and counterexample reports.
std::string set_label(const ObjectSet& a);

}  // namespace rough3
