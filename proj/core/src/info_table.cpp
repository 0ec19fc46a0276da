#include "rough3/info_table.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace rough3 {

namespace {

std::string trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && (s[begin] == ' ' || s[begin] == '\t' || s[begin] == '\r')) ++begin;
  while (end > begin && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) --end;
  return std::string(s.substr(begin, end - begin));
}

std::vector<std::string> split_cells(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

bool blank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

InformationTable::InformationTable(std::vector<std::string> objects,
                                   std::vector<std::string> attributes,
                                   std::vector<std::vector<std::string>> cells)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      cells_(std::move(cells)) {
  if (objects_.empty()) {
    throw InputError("empty table: no object rows");
  }
  if (attributes_.empty()) {
    throw InputError("empty attribute set");
  }
  std::set<std::string> attr_seen;
  for (const auto& a : attributes_) {
    if (a.empty()) throw InputError("empty attribute name");
    if (!attr_seen.insert(a).second) throw InputError("duplicate attribute '" + a + "'");
  }
  if (cells_.size() != objects_.size()) {
    throw InputError("cell matrix does not match the object list");
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].size() != attributes_.size()) {
      throw InputError("cell row for object " + objects_[i] + " has the wrong arity");
    }
    for (const auto& v : cells_[i]) {
      if (v.empty()) throw InputError("empty cell for object " + objects_[i]);
    }
  }
  universe_ = make_universe(objects_);  // also rejects duplicate/empty ids
}

const std::string& InformationTable::value(std::size_t object, std::size_t attribute) const {
  if (object >= objects_.size() || attribute >= attributes_.size()) {
    throw Error("table index out of range");
  }
  return cells_[object][attribute];
}

const std::vector<std::string>& InformationTable::row(std::size_t object) const {
  if (object >= objects_.size()) {
    throw Error("table index out of range");
  }
  return cells_[object];
}

InformationTable parse_table(std::string_view text) {
  // Split into physical lines; line numbers are 1-based and include the
  // header, so the first data row is row 2.
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      std::string_view line = (nl == std::string_view::npos)
                                  ? text.substr(start)
                                  : text.substr(start, nl - start);
      ++line_no;
      if (!blank(line)) {
        lines.emplace_back(line_no, line);
      }
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }

  if (lines.empty()) {
    throw InputError("empty table");
  }

  const auto header = split_cells(lines[0].second);
  if (header.empty() || header[0] != "object") {
    throw InputError("header must start with 'object'");
  }
  if (header.size() < 2) {
    throw InputError("empty attribute set: the table needs at least one attribute column");
  }
  std::vector<std::string> attributes(header.begin() + 1, header.end());
  {
    std::set<std::string> seen;
    for (std::size_t j = 0; j < attributes.size(); ++j) {
      if (attributes[j].empty()) {
        throw InputError("empty attribute name at row 1, column " + std::to_string(j + 2));
      }
      if (!seen.insert(attributes[j]).second) {
        throw InputError("duplicate attribute '" + attributes[j] + "' at row 1");
      }
    }
  }

  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> cells;
  std::set<std::string> object_seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [row_no, line] = lines[k];
    auto row = split_cells(line);
    if (row.size() != header.size()) {
      throw InputError("arity mismatch at row " + std::to_string(row_no) + ": expected " +
                       std::to_string(header.size()) + " cells, got " +
                       std::to_string(row.size()));
    }
    if (row[0].empty()) {
      throw InputError("empty object id at row " + std::to_string(row_no));
    }
    if (!object_seen.insert(row[0]).second) {
      throw InputError("duplicate object " + row[0] + " at row " + std::to_string(row_no));
    }
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (row[j].empty()) {
        throw InputError("empty cell at row " + std::to_string(row_no) + ", column '" +
                         attributes[j - 1] + "'");
      }
    }
    objects.push_back(row[0]);
    cells.emplace_back(row.begin() + 1, row.end());
  }

  if (objects.empty()) {
    throw InputError("empty table: no object rows");
  }
  return InformationTable(std::move(objects), std::move(attributes), std::move(cells));
}

Partition::Partition(UniversePtr universe, const std::vector<std::size_t>& class_assignment)
    : universe_(std::move(universe)) {
  if (!universe_) {
    throw Error("partition requires a universe");
  }
  const std::size_t n = universe_->size();
  if (n == 0) {
    throw InputError("partition requires a nonempty universe");
  }
  if (class_assignment.size() != n) {
    throw Error("class assignment does not match the universe size");
  }
  // Renumber labels by first occurrence so that blocks come out sorted by
  // their least member index.
  std::map<std::size_t, std::size_t> relabel;
  class_of_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = relabel.emplace(class_assignment[i], relabel.size());
    if (inserted) {
      blocks_.emplace_back(ObjectSet::empty_set(universe_));
    }
    class_of_[i] = it->second;
    blocks_[it->second].insert(i);
  }
}

Partition Partition::from_blocks(UniversePtr universe,
                                 const std::vector<std::vector<std::string>>& blocks) {
  if (!universe) {
    throw Error("partition requires a universe");
  }
  const std::size_t n = universe->size();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> assignment(n, kUnassigned);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw InputError("partition block " + std::to_string(b) + " is empty");
    }
    for (const auto& id : blocks[b]) {
      const std::size_t i = universe->index_of(id);
      if (assignment[i] != kUnassigned) {
        throw InputError("object " + id + " appears in more than one block");
      }
      assignment[i] = b;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (assignment[i] == kUnassigned) {
      throw InputError("object " + universe->id(i) + " is not covered by any block");
    }
  }
  return Partition(std::move(universe), assignment);
}

const ObjectSet& Partition::block(std::size_t i) const {
  if (i >= blocks_.size()) {
    throw Error("block index out of range");
  }
  return blocks_[i];
}

std::size_t Partition::class_of(std::size_t object_index) const {
  if (object_index >= class_of_.size()) {
    throw Error("object index out of range");
  }
  return class_of_[object_index];
}

std::size_t Partition::class_of_id(const std::string& id) const {
  return class_of(universe_->index_of(id));
}

const ObjectSet& Partition::block_of(std::size_t object_index) const {
  return blocks_[class_of(object_index)];
}

bool operator==(const Partition& a, const Partition& b) {
  if (!same_universe(a.universe_, b.universe_)) return false;
  return a.class_of_ == b.class_of_;
}

PartitionPtr share(Partition p) { return std::make_shared<const Partition>(std::move(p)); }

bool same_space(const PartitionPtr& a, const PartitionPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_space(const PartitionPtr& a, const PartitionPtr& b) {
  if (!same_space(a, b)) {
    throw UniverseMismatchError("operands live in different approximation spaces");
  }
}

Partition indiscernibility_partition(const InformationTable& table) {
  std::map<std::vector<std::string>, std::size_t> label_of_row;
  std::vector<std::size_t> assignment(table.object_count());
  for (std::size_t i = 0; i < table.object_count(); ++i) {
    auto [it, inserted] = label_of_row.emplace(table.row(i), label_of_row.size());
    (void)inserted;
    assignment[i] = it->second;
  }
  return Partition(table.universe(), assignment);
}

}  // namespace rough3
