#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is written directly from the definitions over sets of
// identifier strings, without touching the library's bit-vector machinery,
// so a bug would have to appear twice (and identically) to slip through.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracles {

using IdSet = std::set<std::string>;
using Blocks = std::vector<IdSet>;

// Partition of table rows by literal row equality, blocks ordered by the
// first row that lands in each.
inline Blocks row_partition(const std::vector<std::string>& objects,
                            const std::vector<std::vector<std::string>>& rows) {
  Blocks blocks;
  std::vector<std::vector<std::string>> block_rows;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    bool placed = false;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (block_rows[b] == rows[i]) {
        blocks[b].insert(objects[i]);
        placed = true;
        break;
      }
    }
    if (!placed) {
      blocks.push_back({objects[i]});
      block_rows.push_back(rows[i]);
    }
  }
  return blocks;
}

inline bool subset_of(const IdSet& a, const IdSet& b) {
  for (const auto& x : a) {
    if (b.find(x) == b.end()) return false;
  }
  return true;
}

inline bool meets(const IdSet& a, const IdSet& b) {
  for (const auto& x : a) {
    if (b.find(x) != b.end()) return true;
  }
  return false;
}

// Upper approximation from the definition: union of blocks meeting the set.
inline IdSet naive_upper(const Blocks& blocks, const IdSet& a) {
  IdSet out;
  for (const auto& block : blocks) {
    if (meets(block, a)) out.insert(block.begin(), block.end());
  }
  return out;
}

// Lower approximation from the definition: union of blocks inside the set.
inline IdSet naive_lower(const Blocks& blocks, const IdSet& a) {
  IdSet out;
  for (const auto& block : blocks) {
    if (subset_of(block, a)) out.insert(block.begin(), block.end());
  }
  return out;
}

// The subset of `universe` encoded by `mask` (bit i = universe[i]).
inline IdSet mask_set(const std::vector<std::string>& universe, std::uint64_t mask) {
  IdSet out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if ((mask >> i) & 1) out.insert(universe[i]);
  }
  return out;
}

// Brute-force realizability: does any subset have exactly this pair of
// approximations?
inline bool brute_force_realizable(const std::vector<std::string>& universe, const Blocks& blocks,
                                   const IdSet& lower_part, const IdSet& upper_part) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
    const IdSet x = mask_set(universe, mask);
    if (naive_lower(blocks, x) == lower_part && naive_upper(blocks, x) == upper_part) {
      return true;
    }
  }
  return false;
}

// Number of distinct approximation pairs, counted by brute force.
inline std::size_t brute_force_rough_count(const std::vector<std::string>& universe,
                                           const Blocks& blocks) {
  std::set<std::pair<IdSet, IdSet>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
    const IdSet x = mask_set(universe, mask);
    seen.emplace(naive_lower(blocks, x), naive_upper(blocks, x));
  }
  return seen.size();
}

// The closed-form count: one Boolean choice per singleton block, three
// choices (out / boundary / in) per larger block.
inline std::size_t predicted_rough_count(const Blocks& blocks) {
  std::size_t count = 1;
  for (const auto& block : blocks) {
    count *= (block.size() >= 2) ? 3 : 2;
  }
  return count;
}

// Checks the three possibility-operator laws for an arbitrary candidate
// operator, quantifying over all pairs of subsets.  Used both to confirm
// the real upper approximation and to show that a wrong operator (such as
// the identity) can still satisfy all three laws.
template <typename Op>
inline bool satisfies_possibility_laws(const std::vector<std::string>& universe, Op m) {
  const std::uint64_t limit = std::uint64_t{1} << universe.size();
  if (!m(IdSet{}).empty()) return false;  // M0
  for (std::uint64_t am = 0; am < limit; ++am) {
    const IdSet a = mask_set(universe, am);
    if (!subset_of(a, m(a))) return false;  // M1
    for (std::uint64_t bm = 0; bm < limit; ++bm) {
      const IdSet b = mask_set(universe, bm);
      IdSet inner;  // A & MB
      const IdSet mb = m(b);
      for (const auto& x : a) {
        if (mb.find(x) != mb.end()) inner.insert(x);
      }
      IdSet rhs;  // MA & MB
      const IdSet ma = m(a);
      for (const auto& x : ma) {
        if (mb.find(x) != mb.end()) rhs.insert(x);
      }
      if (m(inner) != rhs) return false;  // M2
    }
  }
  return true;
}

// Checks that the image of an operator consists of unions of blocks and
// that the operator fixes exactly those unions.  The identity operator
// fails this for any partition with a block of two or more elements.
template <typename Op>
inline bool image_is_block_closed(const std::vector<std::string>& universe, const Blocks& blocks,
                                  Op m) {
  const std::uint64_t limit = std::uint64_t{1} << universe.size();
  for (std::uint64_t am = 0; am < limit; ++am) {
    const IdSet a = mask_set(universe, am);
    const IdSet image = m(a);
    // A union of blocks contains every block it meets.
    for (const auto& block : blocks) {
      if (meets(block, image) && !subset_of(block, image)) return false;
    }
  }
  return true;
}

}  // namespace oracles
