#include "rough3/monteiro.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "rough3/approximation.hpp"
#include "rough3/error.hpp"
#include "rough3/finite_lukasiewicz.hpp"

namespace rough3 {

namespace {

void require_universe_bound(const PartitionPtr& p, std::size_t max_universe) {
  if (!p) throw Error("null partition");
  const std::size_t n = p->object_count();
  if (n > max_universe) {
    throw InputError("universe of " + std::to_string(n) +
                     " objects exceeds the exhaustive bound of " + std::to_string(max_universe));
  }
}

std::string set2(const ObjectSet& a, const ObjectSet& b) {
  return "A=" + set_label(a) + ", B=" + set_label(b);
}

}  // namespace

ThreeValue tv_min(ThreeValue a, ThreeValue b) {
  return static_cast<ThreeValue>(std::min(static_cast<int>(a), static_cast<int>(b)));
}

ThreeValue tv_max(ThreeValue a, ThreeValue b) {
  return static_cast<ThreeValue>(std::max(static_cast<int>(a), static_cast<int>(b)));
}

ThreeValue tv_complement(ThreeValue a) {
  return static_cast<ThreeValue>(2 - static_cast<int>(a));
}

std::string to_string(ThreeValue v) {
  switch (v) {
    case ThreeValue::zero:
      return "0";
    case ThreeValue::half:
      return "1/2";
    case ThreeValue::one:
      return "1";
  }
  throw Error("invalid membership grade");
}

ObjectSet cap_dot(const Partition& p, const ObjectSet& a, const ObjectSet& b) {
  require_same_universe(p.universe(), a.universe());
  require_same_universe(p.universe(), b.universe());
  return set_intersection(set_intersection(upper(p, a), b),
                          set_union(a, upper(p, complement(b))));
}

ObjectSet uplus(const Partition& p, const ObjectSet& a, const ObjectSet& b) {
  require_same_universe(p.universe(), a.universe());
  require_same_universe(p.universe(), b.universe());
  return set_union(set_union(lower(p, a), b),
                   set_intersection(a, lower(p, complement(b))));
}

bool congruent(const Partition& p, const ObjectSet& a, const ObjectSet& b) {
  require_same_universe(p.universe(), a.universe());
  require_same_universe(p.universe(), b.universe());
  return lower(p, a) == lower(p, b) && upper(p, a) == upper(p, b);
}

std::vector<CongruenceClass> congruence_classes(const PartitionPtr& p,
                                                std::size_t max_universe) {
  require_universe_bound(p, max_universe);
  const std::size_t n = p->object_count();
  std::vector<CongruenceClass> classes;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ObjectSet a = ObjectSet::from_mask(p->universe(), mask);
    RoughSet sig = rough_of(p, a);
    const auto key = std::make_pair(sig.lower_part().mask(), sig.upper_part().mask());
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, classes.size());
      classes.push_back(CongruenceClass{std::move(sig), {std::move(a)}});
    } else {
      classes[it->second].members.push_back(std::move(a));
    }
  }
  return classes;
}

namespace {

// Shared scaffolding: classes plus a mask -> class index table.
struct ClassTable {
  std::vector<CongruenceClass> classes;
  std::vector<std::size_t> class_of_mask;  // indexed by subset mask

  ClassTable(const PartitionPtr& p, std::size_t max_universe)
      : classes(congruence_classes(p, max_universe)) {
    const std::size_t n = p->object_count();
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      index.emplace(std::make_pair(classes[i].signature.lower_part().mask(),
                                   classes[i].signature.upper_part().mask()),
                    i);
    }
    class_of_mask.resize(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ObjectSet a = ObjectSet::from_mask(p->universe(), mask);
      const auto key = std::make_pair(lower(*p, a).mask(), upper(*p, a).mask());
      class_of_mask[mask] = index.at(key);
    }
  }

  std::size_t class_of(const ObjectSet& a) const { return class_of_mask[a.mask()]; }
  const ObjectSet& representative(std::size_t c) const { return classes[c].members.front(); }
};

}  // namespace

FiniteAlgebra quotient_algebra(const PartitionPtr& p, std::size_t max_universe) {
  const ClassTable table(p, max_universe);
  const std::size_t n = table.classes.size();

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& c : table.classes) names.push_back(rough_label(c.signature));

  std::vector<std::vector<int>> meet_t(n, std::vector<int>(n));
  std::vector<std::vector<int>> join_t(n, std::vector<int>(n));
  std::vector<int> neg_t(n);
  std::vector<int> nabla_t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ObjectSet& a = table.representative(i);
    neg_t[i] = static_cast<int>(table.class_of(complement(a)));
    nabla_t[i] = static_cast<int>(table.class_of(upper(*p, a)));
    for (std::size_t j = 0; j < n; ++j) {
      const ObjectSet& b = table.representative(j);
      meet_t[i][j] = static_cast<int>(table.class_of(cap_dot(*p, a, b)));
      join_t[i][j] = static_cast<int>(table.class_of(uplus(*p, a, b)));
    }
  }
  const int one = static_cast<int>(table.class_of(ObjectSet::full_set(p->universe())));
  return FiniteAlgebra::from_tables(std::move(names), std::move(meet_t), std::move(join_t),
                                    std::move(neg_t), std::move(nabla_t), one);
}

VerificationReport verify_congruence(const PartitionPtr& p, std::size_t max_universe) {
  const ClassTable table(p, max_universe);
  const std::size_t n = p->object_count();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  VerificationReport report;

  auto binary_stable = [&](auto op) -> std::pair<bool, std::string> {
    for (std::uint64_t am = 0; am < subsets; ++am) {
      const ObjectSet a = ObjectSet::from_mask(p->universe(), am);
      const ObjectSet& ra = table.representative(table.class_of(a));
      for (std::uint64_t bm = 0; bm < subsets; ++bm) {
        const ObjectSet b = ObjectSet::from_mask(p->universe(), bm);
        const ObjectSet& rb = table.representative(table.class_of(b));
        if (table.class_of(op(a, b)) != table.class_of(op(ra, rb))) {
          return {false, set2(a, b)};
        }
      }
    }
    return {true, ""};
  };
  auto unary_stable = [&](auto op) -> std::pair<bool, std::string> {
    for (std::uint64_t am = 0; am < subsets; ++am) {
      const ObjectSet a = ObjectSet::from_mask(p->universe(), am);
      const ObjectSet& ra = table.representative(table.class_of(a));
      if (table.class_of(op(a)) != table.class_of(op(ra))) {
        return {false, "A=" + set_label(a)};
      }
    }
    return {true, ""};
  };

  {
    auto [ok, cx] =
        binary_stable([&](const ObjectSet& a, const ObjectSet& b) { return cap_dot(*p, a, b); });
    report.add("class of A capdot B depends only on the classes of A and B", ok, cx);
  }
  {
    auto [ok, cx] =
        binary_stable([&](const ObjectSet& a, const ObjectSet& b) { return uplus(*p, a, b); });
    report.add("class of A uplus B depends only on the classes of A and B", ok, cx);
  }
  {
    auto [ok, cx] = unary_stable([&](const ObjectSet& a) { return complement(a); });
    report.add("class of ~A depends only on the class of A", ok, cx);
  }
  {
    auto [ok, cx] = unary_stable([&](const ObjectSet& a) { return upper(*p, a); });
    report.add("class of MA depends only on the class of A", ok, cx);
  }

  return report;
}

VerificationReport verify_distribution_identities(const PartitionPtr& p,
                                                  std::size_t max_universe) {
  require_universe_bound(p, max_universe);
  const std::size_t n = p->object_count();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  VerificationReport report;

  auto check_all = [&](std::string name, auto pred) {
    bool ok = true;
    std::string cx;
    for (std::uint64_t am = 0; am < subsets && ok; ++am) {
      const ObjectSet a = ObjectSet::from_mask(p->universe(), am);
      for (std::uint64_t bm = 0; bm < subsets && ok; ++bm) {
        const ObjectSet b = ObjectSet::from_mask(p->universe(), bm);
        if (!pred(a, b)) {
          ok = false;
          cx = set2(a, b);
        }
      }
    }
    report.add(std::move(name), ok, cx);
  };

  check_all("M(A capdot B) = MA & MB", [&](const ObjectSet& a, const ObjectSet& b) {
    return upper(*p, cap_dot(*p, a, b)) == set_intersection(upper(*p, a), upper(*p, b));
  });
  check_all("M(A uplus B) = MA | MB", [&](const ObjectSet& a, const ObjectSet& b) {
    return upper(*p, uplus(*p, a, b)) == set_union(upper(*p, a), upper(*p, b));
  });
  check_all("L(A capdot B) = LA & LB", [&](const ObjectSet& a, const ObjectSet& b) {
    return lower(*p, cap_dot(*p, a, b)) == set_intersection(lower(*p, a), lower(*p, b));
  });
  check_all("L(A uplus B) = LA | LB", [&](const ObjectSet& a, const ObjectSet& b) {
    return lower(*p, uplus(*p, a, b)) == set_union(lower(*p, a), lower(*p, b));
  });

  return report;
}

VerificationReport verify_quotient_isomorphism(const PartitionPtr& p, std::size_t max_universe) {
  const FiniteAlgebra q = quotient_algebra(p, max_universe);
  const FiniteAlgebra r = import_rough_algebra(p, max_universe);
  VerificationReport report;

  {
    bool ok = q.size() == r.size();
    std::string cx;
    if (!ok) {
      cx = std::to_string(q.size()) + " classes vs " + std::to_string(r.size()) + " rough sets";
    }
    for (std::size_t i = 0; i < q.size() && ok; ++i) {
      if (q.elements()[i] != r.elements()[i]) {
        ok = false;
        cx = "index " + std::to_string(i) + ": " + q.elements()[i] + " vs " + r.elements()[i];
      }
    }
    report.add("quotient and rough-set algebra share the carrier", ok, cx);
  }
  if (q.size() == r.size()) {
    const int n = static_cast<int>(q.size());
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      if (q.neg(x) != r.neg(x)) {
        ok = false;
        cx = "~ at x=" + q.name(x);
      } else if (q.nabla(x) != r.nabla(x)) {
        ok = false;
        cx = "nabla at x=" + q.name(x);
      }
      for (int y = 0; y < n && ok; ++y) {
        if (q.meet(x, y) != r.meet(x, y)) {
          ok = false;
          cx = "meet at " + std::string("x=") + q.name(x) + ", y=" + q.name(y);
        } else if (q.join(x, y) != r.join(x, y)) {
          ok = false;
          cx = "join at " + std::string("x=") + q.name(x) + ", y=" + q.name(y);
        }
      }
    }
    if (ok && q.one() != r.one()) {
      ok = false;
      cx = "designated one differs";
    }
    report.add("quotient and rough-set algebra share all operation tables", ok, cx);
  } else {
    report.add_fail("quotient and rough-set algebra share all operation tables",
                    "carriers differ in size");
  }

  return report;
}

ThreeValue membership(const Partition& p, const ObjectSet& a, const std::string& object_id) {
  require_same_universe(p.universe(), a.universe());
  const std::size_t idx = p.universe()->index_of(object_id);
  if (lower(p, a).contains(idx)) return ThreeValue::one;
  if (upper(p, a).contains(idx)) return ThreeValue::half;
  return ThreeValue::zero;
}

std::vector<ThreeValue> membership_grades(const Partition& p, const ObjectSet& a) {
  require_same_universe(p.universe(), a.universe());
  const ObjectSet lo = lower(p, a);
  const ObjectSet up = upper(p, a);
  std::vector<ThreeValue> grades;
  grades.reserve(p.object_count());
  for (std::size_t i = 0; i < p.object_count(); ++i) {
    if (lo.contains(i)) {
      grades.push_back(ThreeValue::one);
    } else if (up.contains(i)) {
      grades.push_back(ThreeValue::half);
    } else {
      grades.push_back(ThreeValue::zero);
    }
  }
  return grades;
}

VerificationReport verify_membership_extension(const PartitionPtr& p, std::size_t max_universe) {
  require_universe_bound(p, max_universe);
  const std::size_t n = p->object_count();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  VerificationReport report;

  std::vector<std::vector<ThreeValue>> mu;
  mu.reserve(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    mu.push_back(membership_grades(*p, ObjectSet::from_mask(p->universe(), mask)));
  }

  auto object_name = [&](std::size_t i) { return p->universe()->ids()[i]; };

  {
    bool ok = true;
    std::string cx;
    for (std::uint64_t am = 0; am < subsets && ok; ++am) {
      const ObjectSet a = ObjectSet::from_mask(p->universe(), am);
      for (std::uint64_t bm = 0; bm < subsets && ok; ++bm) {
        const ObjectSet b = ObjectSet::from_mask(p->universe(), bm);
        const auto lhs = membership_grades(*p, uplus(*p, a, b));
        for (std::size_t i = 0; i < n && ok; ++i) {
          if (lhs[i] != tv_max(mu[am][i], mu[bm][i])) {
            ok = false;
            cx = set2(a, b) + ", object " + object_name(i);
          }
        }
      }
    }
    report.add("mu(A uplus B) = max(mu(A), mu(B))", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (std::uint64_t am = 0; am < subsets && ok; ++am) {
      const ObjectSet a = ObjectSet::from_mask(p->universe(), am);
      for (std::uint64_t bm = 0; bm < subsets && ok; ++bm) {
        const ObjectSet b = ObjectSet::from_mask(p->universe(), bm);
        const auto lhs = membership_grades(*p, cap_dot(*p, a, b));
        for (std::size_t i = 0; i < n && ok; ++i) {
          if (lhs[i] != tv_min(mu[am][i], mu[bm][i])) {
            ok = false;
            cx = set2(a, b) + ", object " + object_name(i);
          }
        }
      }
    }
    report.add("mu(A capdot B) = min(mu(A), mu(B))", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (std::uint64_t am = 0; am < subsets && ok; ++am) {
      const ObjectSet a = ObjectSet::from_mask(p->universe(), am);
      const auto lhs = membership_grades(*p, complement(a));
      for (std::size_t i = 0; i < n && ok; ++i) {
        if (lhs[i] != tv_complement(mu[am][i])) {
          ok = false;
          cx = "A=" + set_label(a) + ", object " + object_name(i);
        }
      }
    }
    report.add("mu(~A) = 1 - mu(A)", ok, cx);
  }

  return report;
}

VerificationReport verify_rough_monteiro_bridge(const PartitionPtr& p, std::size_t max_universe) {
  require_universe_bound(p, max_universe);
  const std::size_t n = p->object_count();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  VerificationReport report;

  auto check_all = [&](std::string name, auto pred) {
    bool ok = true;
    std::string cx;
    for (std::uint64_t am = 0; am < subsets && ok; ++am) {
      const ObjectSet a = ObjectSet::from_mask(p->universe(), am);
      for (std::uint64_t bm = 0; bm < subsets && ok; ++bm) {
        const ObjectSet b = ObjectSet::from_mask(p->universe(), bm);
        if (!pred(a, b)) {
          ok = false;
          cx = set2(a, b);
        }
      }
    }
    report.add(std::move(name), ok, cx);
  };

  check_all("rough class of A capdot B = meet of the rough classes",
            [&](const ObjectSet& a, const ObjectSet& b) {
              return rough_of(p, cap_dot(*p, a, b)) == meet(rough_of(p, a), rough_of(p, b));
            });
  check_all("rough class of A uplus B = join of the rough classes",
            [&](const ObjectSet& a, const ObjectSet& b) {
              return rough_of(p, uplus(*p, a, b)) == join(rough_of(p, a), rough_of(p, b));
            });

  return report;
}

}  // namespace rough3
