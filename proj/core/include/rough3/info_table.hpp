#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rough3/object_set.hpp"

namespace rough3 {

// A finite attribute-value table: one row per object, one column per
// attribute, every cell filled.  Two objects are indiscernible when their
// rows agree on every attribute; that relation induces the canonical
// partition of the universe.
class InformationTable {
 public:
  InformationTable(std::vector<std::string> objects,
                   std::vector<std::string> attributes,
                   std::vector<std::vector<std::string>> cells);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::string& value(std::size_t object, std::size_t attribute) const;
  const std::vector<std::string>& row(std::size_t object) const;
  const UniversePtr& universe() const { return universe_; }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<std::string>> cells_;  // row-major
  UniversePtr universe_;
};

// Parses CSV text with header "object,<attr>,...".  Cells are trimmed of
// surrounding whitespace and compared as exact string tokens.  Errors carry
// 1-based physical line numbers (the header is row 1).
InformationTable parse_table(std::string_view text);

// A partition of a universe into disjoint nonempty blocks.  Blocks are kept
// in canonical order: sorted by the least universe index they contain.
class Partition {
 public:
  // `class_assignment[i]` is an arbitrary label for the block of object i;
  // labels are renumbered canonically.
  Partition(UniversePtr universe, const std::vector<std::size_t>& class_assignment);
  // Blocks given as identifier lists; must cover the universe disjointly.
  static Partition from_blocks(UniversePtr universe,
                               const std::vector<std::vector<std::string>>& blocks);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<ObjectSet>& blocks() const { return blocks_; }
  const ObjectSet& block(std::size_t i) const;
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t object_count() const { return universe_->size(); }
  std::size_t class_of(std::size_t object_index) const;
  std::size_t class_of_id(const std::string& id) const;
  const ObjectSet& block_of(std::size_t object_index) const;

  friend bool operator==(const Partition& a, const Partition& b);
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  UniversePtr universe_;
  std::vector<ObjectSet> blocks_;
  std::vector<std::size_t> class_of_;
};

using PartitionPtr = std::shared_ptr<const Partition>;

PartitionPtr share(Partition p);
bool same_space(const PartitionPtr& a, const PartitionPtr& b);
void require_same_space(const PartitionPtr& a, const PartitionPtr& b);

// The partition of the table's objects by row equality over all attributes.
Partition indiscernibility_partition(const InformationTable& table);

}  // namespace rough3
