#include "rough3/object_set.hpp"

#include <bit>
#include <utility>

namespace rough3 {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

Universe::Universe(std::vector<std::string> ids) : ids_(std::move(ids)) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i].empty()) {
      throw InputError("empty object id in universe");
    }
    auto [it, inserted] = index_.emplace(ids_[i], i);
    (void)it;
    if (!inserted) {
      throw InputError("duplicate object " + ids_[i] + " in universe");
    }
  }
}

const std::string& Universe::id(std::size_t index) const {
  if (index >= ids_.size()) {
    throw Error("object index out of range");
  }
  return ids_[index];
}

std::size_t Universe::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw InputError("unknown object id '" + id + "'");
  }
  return it->second;
}

bool Universe::contains(const std::string& id) const {
  return index_.find(id) != index_.end();
}

UniversePtr make_universe(std::vector<std::string> ids) {
  return std::make_shared<const Universe>(std::move(ids));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) {
    throw UniverseMismatchError("operands are bound to different universes");
  }
}

ObjectSet::ObjectSet(UniversePtr universe)
    : universe_(std::move(universe)), words_(word_count(universe_ ? universe_->size() : 0), 0) {
  if (!universe_) {
    throw Error("object set requires a universe");
  }
}

ObjectSet ObjectSet::empty_set(UniversePtr universe) { return ObjectSet(std::move(universe)); }

ObjectSet ObjectSet::full_set(UniversePtr universe) {
  ObjectSet s(std::move(universe));
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

ObjectSet ObjectSet::of(UniversePtr universe, const std::vector<std::string>& ids) {
  ObjectSet s(std::move(universe));
  for (const auto& id : ids) {
    s.insert(s.universe_->index_of(id));
  }
  return s;
}

ObjectSet ObjectSet::from_mask(UniversePtr universe, std::uint64_t mask) {
  ObjectSet s(std::move(universe));
  const std::size_t n = s.universe_->size();
  if (n > 64) {
    throw Error("mask construction requires a universe of at most 64 objects");
  }
  if (n < 64 && (mask >> n) != 0) {
    throw Error("mask has bits outside the universe");
  }
  if (n > 0) {
    s.words_[0] = mask;
  }
  return s;
}

std::size_t ObjectSet::universe_size() const { return universe_->size(); }

bool ObjectSet::contains(std::size_t index) const {
  if (index >= universe_->size()) {
    throw Error("object index out of range");
  }
  return (words_[index >> 6] >> (index & 63)) & 1;
}

bool ObjectSet::contains_id(const std::string& id) const {
  return contains(universe_->index_of(id));
}

void ObjectSet::insert(std::size_t index) {
  if (index >= universe_->size()) {
    throw Error("object index out of range");
  }
  words_[index >> 6] |= std::uint64_t{1} << (index & 63);
}

std::size_t ObjectSet::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool ObjectSet::is_empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<std::string> ObjectSet::members() const {
  std::vector<std::string> out;
  out.reserve(count());
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    if (contains(i)) out.push_back(universe_->id(i));
  }
  return out;
}

std::uint64_t ObjectSet::mask() const {
  if (universe_->size() > 64) {
    throw Error("mask extraction requires a universe of at most 64 objects");
  }
  return words_.empty() ? 0 : words_[0];
}

void ObjectSet::trim() {
  const std::size_t n = universe_->size();
  if (words_.empty()) return;
  const std::size_t used = n & 63;
  if (used != 0) {
    words_.back() &= (std::uint64_t{1} << used) - 1;
  }
}

bool operator==(const ObjectSet& a, const ObjectSet& b) {
  if (!same_universe(a.universe_, b.universe_)) return false;
  return a.words_ == b.words_;
}

ObjectSet set_union(const ObjectSet& a, const ObjectSet& b) {
  require_same_universe(a.universe_, b.universe_);
  ObjectSet out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] |= b.words_[i];
  return out;
}

ObjectSet set_intersection(const ObjectSet& a, const ObjectSet& b) {
  require_same_universe(a.universe_, b.universe_);
  ObjectSet out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] &= b.words_[i];
  return out;
}

ObjectSet set_difference(const ObjectSet& a, const ObjectSet& b) {
  require_same_universe(a.universe_, b.universe_);
  ObjectSet out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] &= ~b.words_[i];
  return out;
}

ObjectSet complement(const ObjectSet& a) {
  ObjectSet out = a;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

bool is_subset(const ObjectSet& a, const ObjectSet& b) {
  require_same_universe(a.universe_, b.universe_);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if ((a.words_[i] & ~b.words_[i]) != 0) return false;
  }
  return true;
}

bool are_disjoint(const ObjectSet& a, const ObjectSet& b) {
  require_same_universe(a.universe_, b.universe_);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if ((a.words_[i] & b.words_[i]) != 0) return false;
  }
  return true;
}

std::string set_label(const ObjectSet& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : a.members()) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace rough3
