#include "rough3/rough_algebra.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

namespace rough3 {

namespace {

std::string pair_text(const ObjectSet& first, const ObjectSet& second) {
  return set_label(first) + "|" + set_label(second);
}

void require_universe_bound(const PartitionPtr& p, std::size_t max_universe) {
  if (!p) throw Error("null partition");
  const std::size_t n = p->object_count();
  if (n > max_universe) {
    throw InputError("universe of " + std::to_string(n) +
                     " objects exceeds the exhaustive bound of " + std::to_string(max_universe));
  }
}

}  // namespace

RoughSet::RoughSet(PartitionPtr space, ObjectSet lower, ObjectSet upper)
    : lower_(std::move(lower)), upper_(std::move(upper)), space_(std::move(space)) {}

bool operator==(const RoughSet& a, const RoughSet& b) {
  return same_space(a.space_, b.space_) && a.lower_ == b.lower_ && a.upper_ == b.upper_;
}

std::string rough_label(const RoughSet& a) {
  return pair_label(a.lower_part(), a.upper_part());
}

std::string pair_label(const ObjectSet& first, const ObjectSet& second) {
  return pair_text(first, second);
}

RoughSet rough_set(const PartitionPtr& p, ObjectSet lower_part, ObjectSet upper_part) {
  if (!p) throw Error("null partition");
  require_same_universe(p->universe(), lower_part.universe());
  require_same_universe(p->universe(), upper_part.universe());
  if (!is_closed(*p, lower_part)) {
    throw InputError("lower component " + set_label(lower_part) + " is not a union of blocks");
  }
  if (!is_closed(*p, upper_part)) {
    throw InputError("upper component " + set_label(upper_part) + " is not a union of blocks");
  }
  if (!is_subset(lower_part, upper_part)) {
    throw InputError("lower component " + set_label(lower_part) +
                     " is not contained in the upper component " + set_label(upper_part));
  }
  if (!is_realizable(p, lower_part, upper_part)) {
    throw InputError("pair " + pair_text(lower_part, upper_part) +
                     " is not the approximation pair of any subset");
  }
  return RoughSet(p, std::move(lower_part), std::move(upper_part));
}

RoughSet rough_of(const PartitionPtr& p, const ObjectSet& x) {
  if (!p) throw Error("null partition");
  return rough_set(p, lower(*p, x), upper(*p, x));
}

RoughSet meet(const RoughSet& a, const RoughSet& b) {
  require_same_space(a.space(), b.space());
  return rough_set(a.space(), set_intersection(a.lower_part(), b.lower_part()),
                   set_intersection(a.upper_part(), b.upper_part()));
}

RoughSet join(const RoughSet& a, const RoughSet& b) {
  require_same_space(a.space(), b.space());
  return rough_set(a.space(), set_union(a.lower_part(), b.lower_part()),
                   set_union(a.upper_part(), b.upper_part()));
}

RoughSet negation(const RoughSet& a) {
  return rough_set(a.space(), complement(a.upper_part()), complement(a.lower_part()));
}

RoughSet possibility(const RoughSet& a) {
  return rough_set(a.space(), a.upper_part(), a.upper_part());
}

RoughSet necessity(const RoughSet& a) {
  return rough_set(a.space(), a.lower_part(), a.lower_part());
}

RoughSet heyting_implication(const RoughSet& a, const RoughSet& b) {
  require_same_space(a.space(), b.space());
  // ~Ma v b v (M~a & Mb)
  return join(join(negation(possibility(a)), b),
              meet(possibility(negation(a)), possibility(b)));
}

bool rough_leq(const RoughSet& a, const RoughSet& b) {
  require_same_space(a.space(), b.space());
  return is_subset(a.lower_part(), b.lower_part()) && is_subset(a.upper_part(), b.upper_part());
}

RoughSet rough_zero(const PartitionPtr& p) {
  return rough_set(p, ObjectSet::empty_set(p->universe()), ObjectSet::empty_set(p->universe()));
}

RoughSet rough_one(const PartitionPtr& p) {
  return rough_set(p, ObjectSet::full_set(p->universe()), ObjectSet::full_set(p->universe()));
}

std::optional<RoughSet> center_of_rough_sets(const PartitionPtr& p) {
  if (!p) throw Error("null partition");
  for (const auto& block : p->blocks()) {
    if (block.count() < 2) return std::nullopt;
  }
  return rough_set(p, ObjectSet::empty_set(p->universe()), ObjectSet::full_set(p->universe()));
}

std::vector<RoughSet> enumerate_rough_sets(const PartitionPtr& p, std::size_t max_universe) {
  require_universe_bound(p, max_universe);
  const std::size_t n = p->object_count();
  std::vector<RoughSet> out;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    RoughSet r = rough_of(p, ObjectSet::from_mask(p->universe(), mask));
    auto key = std::make_pair(r.lower_part().mask(), r.upper_part().mask());
    if (seen.insert(key).second) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

MoisilPair::MoisilPair(PartitionPtr space, ObjectSet first, ObjectSet second)
    : first_(std::move(first)), second_(std::move(second)), space_(std::move(space)) {}

bool operator==(const MoisilPair& a, const MoisilPair& b) {
  return same_space(a.space_, b.space_) && a.first_ == b.first_ && a.second_ == b.second_;
}

MoisilPair moisil_pair(const PartitionPtr& p, ObjectSet first, ObjectSet second) {
  if (!p) throw Error("null partition");
  require_same_universe(p->universe(), first.universe());
  require_same_universe(p->universe(), second.universe());
  if (!is_closed(*p, first)) {
    throw InputError("first component " + set_label(first) + " is not a union of blocks");
  }
  if (!is_closed(*p, second)) {
    throw InputError("second component " + set_label(second) + " is not a union of blocks");
  }
  if (!is_subset(first, second)) {
    throw InputError("first component " + set_label(first) +
                     " is not contained in the second component " + set_label(second));
  }
  return MoisilPair(p, std::move(first), std::move(second));
}

std::vector<MoisilPair> moisil_pairs(const PartitionPtr& p, std::size_t max_universe) {
  require_universe_bound(p, max_universe);
  const auto closed = closed_elements(*p);
  std::vector<MoisilPair> out;
  for (const auto& first : closed) {
    for (const auto& second : closed) {
      if (is_subset(first, second)) {
        out.push_back(moisil_pair(p, first, second));
      }
    }
  }
  return out;
}

MoisilPair moisil_meet(const MoisilPair& a, const MoisilPair& b) {
  require_same_space(a.space(), b.space());
  return moisil_pair(a.space(), set_intersection(a.first(), b.first()),
                     set_intersection(a.second(), b.second()));
}

MoisilPair moisil_join(const MoisilPair& a, const MoisilPair& b) {
  require_same_space(a.space(), b.space());
  return moisil_pair(a.space(), set_union(a.first(), b.first()),
                     set_union(a.second(), b.second()));
}

MoisilPair moisil_negation(const MoisilPair& a) {
  return moisil_pair(a.space(), complement(a.second()), complement(a.first()));
}

MoisilPair moisil_possibility(const MoisilPair& a) {
  return moisil_pair(a.space(), a.second(), a.second());
}

MoisilPair moisil_necessity(const MoisilPair& a) {
  return moisil_pair(a.space(), a.first(), a.first());
}

bool moisil_leq(const MoisilPair& a, const MoisilPair& b) {
  require_same_space(a.space(), b.space());
  return is_subset(a.first(), b.first()) && is_subset(a.second(), b.second());
}

MoisilPair moisil_center(const PartitionPtr& p) {
  if (!p) throw Error("null partition");
  return moisil_pair(p, ObjectSet::empty_set(p->universe()), ObjectSet::full_set(p->universe()));
}

MoisilPair to_moisil_pair(const RoughSet& a) {
  return moisil_pair(a.space(), a.lower_part(), a.upper_part());
}

bool is_realizable(const PartitionPtr& p, const ObjectSet& first, const ObjectSet& second) {
  if (!p) throw Error("null partition");
  require_same_universe(p->universe(), first.universe());
  require_same_universe(p->universe(), second.universe());
  if (!is_closed(*p, first) || !is_closed(*p, second)) return false;
  if (!is_subset(first, second)) return false;
  // Blocks fully inside the boundary region need a proper nonempty trace,
  // which takes at least two elements.
  for (const auto& block : p->blocks()) {
    if (is_subset(block, second) && are_disjoint(block, first) && block.count() < 2) {
      return false;
    }
  }
  return true;
}

std::optional<ObjectSet> realize_witness(const PartitionPtr& p, const MoisilPair& pair) {
  if (!is_realizable(p, pair.first(), pair.second())) return std::nullopt;
  // Take the whole lower region plus one representative from each boundary
  // block: the block then meets the witness without being contained in it.
  ObjectSet witness = pair.first();
  for (const auto& block : p->blocks()) {
    if (is_subset(block, pair.second()) && are_disjoint(block, pair.first())) {
      for (std::size_t i = 0; i < p->object_count(); ++i) {
        if (block.contains(i)) {
          witness.insert(i);
          break;
        }
      }
    }
  }
  return witness;
}

VerificationReport verify_determination(const PartitionPtr& p, std::size_t max_universe) {
  VerificationReport report;

  {
    const auto elems = enumerate_rough_sets(p, max_universe);
    bool ok = true;
    std::string cx;
    for (std::size_t i = 0; i < elems.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < elems.size() && ok; ++j) {
        if (necessity(elems[i]) == necessity(elems[j]) &&
            possibility(elems[i]) == possibility(elems[j]) && !(elems[i] == elems[j])) {
          ok = false;
          cx = "x=" + pair_text(elems[i].lower_part(), elems[i].upper_part()) +
               ", y=" + pair_text(elems[j].lower_part(), elems[j].upper_part());
        }
      }
    }
    report.add("determination principle (rough sets)", ok, cx);
  }

  {
    const auto pairs = moisil_pairs(p, max_universe);
    bool ok = true;
    std::string cx;
    for (std::size_t i = 0; i < pairs.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < pairs.size() && ok; ++j) {
        if (moisil_necessity(pairs[i]) == moisil_necessity(pairs[j]) &&
            moisil_possibility(pairs[i]) == moisil_possibility(pairs[j]) &&
            !(pairs[i] == pairs[j])) {
          ok = false;
          cx = "x=" + pair_text(pairs[i].first(), pairs[i].second()) +
               ", y=" + pair_text(pairs[j].first(), pairs[j].second());
        }
      }
    }
    report.add("determination principle (moisil pairs)", ok, cx);
  }

  return report;
}

VerificationReport verify_algebra_laws(const PartitionPtr& p, std::size_t max_universe) {
  VerificationReport report;
  const auto elems = enumerate_rough_sets(p, max_universe);
  const std::size_t n = elems.size();

  std::set<std::pair<std::uint64_t, std::uint64_t>> universe_of_pairs;
  for (const auto& e : elems) {
    universe_of_pairs.emplace(e.lower_part().mask(), e.upper_part().mask());
  }
  auto known = [&](const RoughSet& r) {
    return universe_of_pairs.count({r.lower_part().mask(), r.upper_part().mask()}) > 0;
  };
  auto label = [](const RoughSet& r) {
    return pair_text(r.lower_part(), r.upper_part());
  };

  {
    bool ok = true;
    std::string cx;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!known(negation(elems[i])) || !known(possibility(elems[i])) ||
          !known(necessity(elems[i]))) {
        ok = false;
        cx = "x=" + label(elems[i]);
      }
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (!known(meet(elems[i], elems[j])) || !known(join(elems[i], elems[j]))) {
          ok = false;
          cx = "x=" + label(elems[i]) + ", y=" + label(elems[j]);
        }
      }
    }
    report.add("rough sets closed under the five operations", ok, cx);
  }

  {
    // The rough sets sit inside the Moisil pairs and the operations agree,
    // so they form a subalgebra of the ambient pair algebra.
    bool ok = true;
    std::string cx;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const MoisilPair mi = to_moisil_pair(elems[i]);
      if (to_moisil_pair(negation(elems[i])) != moisil_negation(mi) ||
          to_moisil_pair(possibility(elems[i])) != moisil_possibility(mi) ||
          to_moisil_pair(necessity(elems[i])) != moisil_necessity(mi)) {
        ok = false;
        cx = "x=" + label(elems[i]);
      }
      for (std::size_t j = 0; j < n && ok; ++j) {
        const MoisilPair mj = to_moisil_pair(elems[j]);
        if (to_moisil_pair(meet(elems[i], elems[j])) != moisil_meet(mi, mj) ||
            to_moisil_pair(join(elems[i], elems[j])) != moisil_join(mi, mj)) {
          ok = false;
          cx = "x=" + label(elems[i]) + ", y=" + label(elems[j]);
        }
      }
    }
    report.add("rough sets are a moisil subalgebra", ok, cx);
  }

  {
    bool ok = true;
    std::string cx;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const RoughSet lhs = meet(elems[i], negation(elems[i]));
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (!rough_leq(lhs, join(elems[j], negation(elems[j])))) {
          ok = false;
          cx = "x=" + label(elems[i]) + ", y=" + label(elems[j]);
        }
      }
    }
    report.add("kleene law: x & ~x <= y | ~y", ok, cx);
  }

  {
    // Cache the binary tables so the triple loop is pure comparisons.
    std::vector<std::vector<RoughSet>> meets;
    std::vector<std::vector<RoughSet>> impls;
    meets.reserve(n);
    impls.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<RoughSet> mrow;
      std::vector<RoughSet> irow;
      mrow.reserve(n);
      irow.reserve(n);
      for (std::size_t j = 0; j < n; ++j) {
        mrow.push_back(meet(elems[i], elems[j]));
        irow.push_back(heyting_implication(elems[i], elems[j]));
      }
      meets.push_back(std::move(mrow));
      impls.push_back(std::move(irow));
    }
    bool ok = true;
    std::string cx;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        for (std::size_t c = 0; c < n && ok; ++c) {
          const bool left = rough_leq(meets[a][c], elems[b]);
          const bool right = rough_leq(elems[c], impls[a][b]);
          if (left != right) {
            ok = false;
            cx = "a=" + label(elems[a]) + ", b=" + label(elems[b]) + ", c=" + label(elems[c]);
          }
        }
      }
    }
    report.add("heyting residuation: a & c <= b iff c <= (a => b)", ok, cx);
  }

  {
    const auto pairs = moisil_pairs(p, max_universe);
    const MoisilPair c = moisil_center(p);
    bool ok = true;
    std::string cx;
    for (const auto& x : pairs) {
      const MoisilPair rebuilt =
          moisil_meet(moisil_join(moisil_necessity(x), c), moisil_possibility(x));
      if (rebuilt != x) {
        ok = false;
        cx = "x=" + pair_text(x.first(), x.second());
        break;
      }
    }
    report.add("center law (moisil pairs): x = (delta x | c) & nabla x", ok, cx);
  }

  if (auto c = center_of_rough_sets(p)) {
    bool ok = true;
    std::string cx;
    for (const auto& x : elems) {
      const RoughSet rebuilt = meet(join(necessity(x), *c), possibility(x));
      if (!(rebuilt == x)) {
        ok = false;
        cx = "x=" + label(x);
        break;
      }
    }
    report.add("center law (rough sets): x = (delta x | c) & nabla x", ok, cx);
  }

  return report;
}

}  // namespace rough3
