#include "rough3/approximation.hpp"

#include <string>

namespace rough3 {

ObjectSet upper(const Partition& p, const ObjectSet& a) {
  require_same_universe(p.universe(), a.universe());
  ObjectSet out = ObjectSet::empty_set(p.universe());
  for (const auto& block : p.blocks()) {
    if (!are_disjoint(block, a)) out = set_union(out, block);
  }
  return out;
}

ObjectSet lower(const Partition& p, const ObjectSet& a) {
  require_same_universe(p.universe(), a.universe());
  ObjectSet out = ObjectSet::empty_set(p.universe());
  for (const auto& block : p.blocks()) {
    if (is_subset(block, a)) out = set_union(out, block);
  }
  return out;
}

bool is_closed(const Partition& p, const ObjectSet& a) { return upper(p, a) == a; }

std::vector<ObjectSet> closed_elements(const Partition& p) {
  const std::size_t k = p.block_count();
  if (k > 20) {
    throw InputError("too many blocks (" + std::to_string(k) +
                     ") to enumerate closed elements; the limit is 20");
  }
  std::vector<ObjectSet> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ObjectSet s = ObjectSet::empty_set(p.universe());
    for (std::size_t b = 0; b < k; ++b) {
      if ((mask >> b) & 1) s = set_union(s, p.block(b));
    }
    out.push_back(std::move(s));
  }
  return out;
}

VerificationReport check_monadic_axioms(const Partition& p, std::size_t max_universe) {
  const std::size_t n = p.object_count();
  if (n > max_universe) {
    throw InputError("universe of " + std::to_string(n) +
                     " objects exceeds the exhaustive bound of " + std::to_string(max_universe));
  }

  const std::uint64_t subsets = std::uint64_t{1} << n;
  // Precompute both operators for every subset; downstream loops are table
  // lookups keyed by bit masks.
  std::vector<ObjectSet> sets;
  std::vector<ObjectSet> m_of;
  std::vector<ObjectSet> l_of;
  sets.reserve(subsets);
  m_of.reserve(subsets);
  l_of.reserve(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    sets.push_back(ObjectSet::from_mask(p.universe(), mask));
    m_of.push_back(upper(p, sets.back()));
    l_of.push_back(lower(p, sets.back()));
  }

  VerificationReport report;

  report.add("M0: M(empty) = empty", m_of[0].is_empty(), m_of[0].is_empty() ? "" : "M(empty) != empty");

  {
    bool ok = true;
    std::string cx;
    for (std::uint64_t a = 0; a < subsets && ok; ++a) {
      if (!is_subset(sets[a], m_of[a])) {
        ok = false;
        cx = "A=" + set_label(sets[a]);
      }
    }
    report.add("M1: A <= MA", ok, cx);
  }

  {
    bool ok = true;
    std::string cx;
    for (std::uint64_t a = 0; a < subsets && ok; ++a) {
      for (std::uint64_t b = 0; b < subsets && ok; ++b) {
        const std::uint64_t inner = sets[a].mask() & m_of[b].mask();
        if (m_of[inner] != set_intersection(m_of[a], m_of[b])) {
          ok = false;
          cx = "A=" + set_label(sets[a]) + ", B=" + set_label(sets[b]);
        }
      }
    }
    report.add("M2: M(A & MB) = MA & MB", ok, cx);
  }

  {
    bool ok = true;
    std::string cx;
    for (std::uint64_t a = 0; a < subsets && ok; ++a) {
      const std::uint64_t comp = complement(sets[a]).mask();
      if (l_of[a] != complement(m_of[comp])) {
        ok = false;
        cx = "A=" + set_label(sets[a]);
      }
    }
    report.add("duality: LA = ~M~A", ok, cx);
  }

  return report;
}

}  // namespace rough3
