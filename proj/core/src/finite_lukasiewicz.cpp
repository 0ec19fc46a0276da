#include "rough3/finite_lukasiewicz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace rough3 {

namespace {

constexpr std::size_t kHardFilterCap = 20;

std::string elem2(const FiniteAlgebra& a, int x, int y) {
  return "x=" + a.name(x) + ", y=" + a.name(y);
}

std::string elem3(const FiniteAlgebra& a, int x, int y, int z) {
  return elem2(a, x, y) + ", z=" + a.name(z);
}

}  // namespace

int FiniteAlgebra::check(int x) const {
  if (x < 0 || static_cast<std::size_t>(x) >= elements_.size()) {
    throw Error("element index out of range");
  }
  return x;
}

const std::string& FiniteAlgebra::name(int x) const { return elements_[check(x)]; }

int FiniteAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) return static_cast<int>(i);
  }
  throw InputError("unknown element '" + name + "'");
}

std::optional<int> FiniteAlgebra::center() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (neg_[i] == static_cast<int>(i)) return static_cast<int>(i);
  }
  return std::nullopt;
}

FiniteAlgebra FiniteAlgebra::from_tables(std::vector<std::string> elements,
                                         std::vector<std::vector<int>> meet,
                                         std::vector<std::vector<int>> join,
                                         std::vector<int> neg,
                                         std::vector<int> nabla,
                                         int one) {
  const std::size_t n = elements.size();
  if (n == 0) {
    throw InputError("algebra needs at least one element");
  }
  {
    std::set<std::string> seen;
    for (const auto& e : elements) {
      if (e.empty()) throw InputError("empty element name");
      if (!seen.insert(e).second) throw InputError("duplicate element name '" + e + "'");
    }
  }
  auto check_square = [n](const std::vector<std::vector<int>>& t, const char* which) {
    if (t.size() != n) {
      throw InputError(std::string(which) + " table must have one row per element");
    }
    for (const auto& row : t) {
      if (row.size() != n) {
        throw InputError(std::string(which) + " table rows must have one entry per element");
      }
      for (int v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) {
          throw InputError(std::string(which) + " table entry out of range");
        }
      }
    }
  };
  auto check_unary = [n](const std::vector<int>& t, const char* which) {
    if (t.size() != n) {
      throw InputError(std::string(which) + " table must have one entry per element");
    }
    for (int v : t) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw InputError(std::string(which) + " table entry out of range");
      }
    }
  };
  check_square(meet, "meet");
  check_square(join, "join");
  check_unary(neg, "neg");
  check_unary(nabla, "nabla");
  if (one < 0 || static_cast<std::size_t>(one) >= n) {
    throw InputError("designated element 'one' out of range");
  }

  FiniteAlgebra a;
  a.elements_ = std::move(elements);
  a.meet_ = std::move(meet);
  a.join_ = std::move(join);
  a.neg_ = std::move(neg);
  a.nabla_ = std::move(nabla);
  a.one_ = one;
  a.zero_ = a.neg_[one];
  return a;
}

FiniteAlgebra three_chain() {
  return FiniteAlgebra::from_tables(
      {"0", "c", "1"},
      {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},
      {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}},
      {2, 1, 0},
      {0, 2, 2},
      2);
}

FiniteAlgebra two_chain() {
  return FiniteAlgebra::from_tables(
      {"0", "1"},
      {{0, 0}, {0, 1}},
      {{0, 1}, {1, 1}},
      {1, 0},
      {0, 1},
      1);
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  auto idx = [nb](std::size_t i, std::size_t j) { return static_cast<int>(i * nb + j); };

  std::vector<std::string> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      elements.push_back("(" + a.elements()[i] + "," + b.elements()[j] + ")");
    }
  }
  std::vector<std::vector<int>> meet(n, std::vector<int>(n));
  std::vector<std::vector<int>> join(n, std::vector<int>(n));
  std::vector<int> neg(n);
  std::vector<int> nabla(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const int x = idx(i, j);
      neg[x] = idx(a.neg(static_cast<int>(i)), b.neg(static_cast<int>(j)));
      nabla[x] = idx(a.nabla(static_cast<int>(i)), b.nabla(static_cast<int>(j)));
      for (std::size_t k = 0; k < na; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          const int y = idx(k, l);
          meet[x][y] = idx(a.meet(static_cast<int>(i), static_cast<int>(k)),
                           b.meet(static_cast<int>(j), static_cast<int>(l)));
          join[x][y] = idx(a.join(static_cast<int>(i), static_cast<int>(k)),
                           b.join(static_cast<int>(j), static_cast<int>(l)));
        }
      }
    }
  }
  return FiniteAlgebra::from_tables(std::move(elements), std::move(meet), std::move(join),
                                    std::move(neg), std::move(nabla),
                                    idx(static_cast<std::size_t>(a.one()),
                                        static_cast<std::size_t>(b.one())));
}

VerificationReport check_axioms(const FiniteAlgebra& a) {
  const int n = static_cast<int>(a.size());
  VerificationReport report;

  auto all2 = [&](auto pred) -> std::pair<bool, std::string> {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!pred(x, y)) return {false, elem2(a, x, y)};
      }
    }
    return {true, ""};
  };
  auto all3 = [&](auto pred) -> std::pair<bool, std::string> {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (!pred(x, y, z)) return {false, elem3(a, x, y, z)};
        }
      }
    }
    return {true, ""};
  };
  auto all1 = [&](auto pred) -> std::pair<bool, std::string> {
    for (int x = 0; x < n; ++x) {
      if (!pred(x)) return {false, "x=" + a.name(x)};
    }
    return {true, ""};
  };
  auto add = [&report](std::string name, std::pair<bool, std::string> result) {
    report.add(std::move(name), result.first, std::move(result.second));
  };

  add("meet commutative", all2([&](int x, int y) { return a.meet(x, y) == a.meet(y, x); }));
  add("join commutative", all2([&](int x, int y) { return a.join(x, y) == a.join(y, x); }));
  add("meet associative", all3([&](int x, int y, int z) {
        return a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z));
      }));
  add("join associative", all3([&](int x, int y, int z) {
        return a.join(a.join(x, y), z) == a.join(x, a.join(y, z));
      }));
  add("absorption", all2([&](int x, int y) {
        return a.meet(x, a.join(x, y)) == x && a.join(x, a.meet(x, y)) == x;
      }));
  add("distributivity", all3([&](int x, int y, int z) {
        return a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z)) &&
               a.join(x, a.meet(y, z)) == a.meet(a.join(x, y), a.join(x, z));
      }));
  add("bounds: 0 and 1", all1([&](int x) {
        return a.meet(x, a.one()) == x && a.join(x, a.one()) == a.one() &&
               a.meet(x, a.zero()) == a.zero() && a.join(x, a.zero()) == x;
      }));
  add("negation involution: ~~x = x", all1([&](int x) { return a.neg(a.neg(x)) == x; }));
  add("de morgan: ~(x & y) = ~x | ~y", all2([&](int x, int y) {
        return a.neg(a.meet(x, y)) == a.join(a.neg(x), a.neg(y)) &&
               a.neg(a.join(x, y)) == a.meet(a.neg(x), a.neg(y));
      }));
  add("~x | nabla x = 1", all1([&](int x) { return a.join(a.neg(x), a.nabla(x)) == a.one(); }));
  add("x & ~x = ~x & nabla x", all1([&](int x) {
        return a.meet(x, a.neg(x)) == a.meet(a.neg(x), a.nabla(x));
      }));
  add("nabla(x & y) = nabla x & nabla y", all2([&](int x, int y) {
        return a.nabla(a.meet(x, y)) == a.meet(a.nabla(x), a.nabla(y));
      }));

  return report;
}

VerificationReport derived_operator_checks(const FiniteAlgebra& a) {
  const int n = static_cast<int>(a.size());
  VerificationReport report;

  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        if (a.nabla(a.join(x, y)) != a.join(a.nabla(x), a.nabla(y))) {
          ok = false;
          cx = elem2(a, x, y);
        }
      }
    }
    report.add("nabla(x | y) = nabla x | nabla y", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      if (!a.leq(x, a.nabla(x))) {
        ok = false;
        cx = "x=" + a.name(x);
      }
    }
    report.add("x <= nabla x", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      if (a.nabla(a.nabla(x)) != a.nabla(x)) {
        ok = false;
        cx = "x=" + a.name(x);
      }
    }
    report.add("nabla nabla x = nabla x", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      const bool invariant = a.nabla(x) == x;
      bool complemented = false;
      for (int y = 0; y < n && !complemented; ++y) {
        if (a.meet(x, y) == a.zero() && a.join(x, y) == a.one()) complemented = true;
      }
      if (invariant != complemented) {
        ok = false;
        cx = "x=" + a.name(x);
      }
    }
    report.add("nabla-invariant elements are exactly the complemented elements", ok, cx);
  }

  return report;
}

bool PrimeFilter::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

namespace {

struct FilterScan {
  int n = 0;
  std::uint32_t full = 0;
  std::vector<std::uint32_t> up_mask;  // up_mask[x]: elements above x
  const FiniteAlgebra* a = nullptr;

  explicit FilterScan(const FiniteAlgebra& alg) : a(&alg) {
    n = static_cast<int>(alg.size());
    full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    up_mask.assign(n, 0);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (alg.leq(x, y)) up_mask[x] |= std::uint32_t{1} << y;
      }
    }
  }

  bool is_prime_filter(std::uint32_t mask) const {
    if (((mask >> a->one()) & 1) == 0) return false;
    if ((mask >> a->zero()) & 1) return false;
    for (int x = 0; x < n; ++x) {
      if (((mask >> x) & 1) == 0) continue;
      if ((up_mask[x] & ~mask) != 0) return false;  // not upward closed
      for (int y = x; y < n; ++y) {
        if (((mask >> y) & 1) == 0) continue;
        if (((mask >> a->meet(x, y)) & 1) == 0) return false;  // not meet closed
      }
    }
    const std::uint32_t outside = full & ~mask;
    for (int x = 0; x < n; ++x) {
      if (((outside >> x) & 1) == 0) continue;
      for (int y = x; y < n; ++y) {
        if (((outside >> y) & 1) == 0) continue;
        if ((mask >> a->join(x, y)) & 1) return false;  // complement not join closed
      }
    }
    return true;
  }
};

std::vector<int> mask_to_members(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if ((mask >> x) & 1) out.push_back(x);
  }
  return out;
}

std::uint32_t members_to_mask(const std::vector<int>& members, int n) {
  std::uint32_t mask = 0;
  for (int x : members) {
    if (x < 0 || x >= n) {
      throw InputError("filter member index out of range");
    }
    mask |= std::uint32_t{1} << x;
  }
  return mask;
}

void require_element_bound(const FiniteAlgebra& a, std::size_t max_elements) {
  const std::size_t cap = std::min(max_elements, kHardFilterCap);
  if (a.size() > cap) {
    throw InputError("algebra of " + std::to_string(a.size()) +
                     " elements exceeds the prime-filter enumeration bound of " +
                     std::to_string(cap));
  }
}

}  // namespace

std::vector<PrimeFilter> prime_filters(const FiniteAlgebra& a, std::size_t max_elements) {
  require_element_bound(a, max_elements);
  const FilterScan scan(a);
  std::vector<PrimeFilter> out;
  for (std::uint32_t mask = 1; mask <= scan.full; ++mask) {
    if (scan.is_prime_filter(mask)) {
      out.push_back(PrimeFilter{mask_to_members(mask, scan.n)});
    }
  }
  return out;
}

PrimeFilter involution_g(const FiniteAlgebra& a, const PrimeFilter& p) {
  require_element_bound(a, kHardFilterCap);
  const FilterScan scan(a);
  const std::uint32_t mask = members_to_mask(p.members, scan.n);
  if (!scan.is_prime_filter(mask)) {
    throw InputError("input is not a prime filter of the algebra");
  }
  std::uint32_t neg_image = 0;
  for (int x : p.members) {
    neg_image |= std::uint32_t{1} << a.neg(x);
  }
  const std::uint32_t g_mask = scan.full & ~neg_image;
  if (!scan.is_prime_filter(g_mask)) {
    throw InputError("the involution image is not a prime filter; the algebra is not three-valued");
  }
  return PrimeFilter{mask_to_members(g_mask, scan.n)};
}

FilterSpace filter_space(const FiniteAlgebra& a, std::size_t max_elements) {
  require_element_bound(a, max_elements);
  const FilterScan scan(a);

  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask <= scan.full; ++mask) {
    if (scan.is_prime_filter(mask)) masks.push_back(mask);
  }
  if (masks.empty()) {
    throw InputError("the algebra has no prime filters (trivial algebra); nothing to represent");
  }

  std::map<std::uint32_t, std::size_t> index_of_mask;
  for (std::size_t i = 0; i < masks.size(); ++i) index_of_mask.emplace(masks[i], i);

  std::vector<std::size_t> g(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    std::uint32_t neg_image = 0;
    for (int x = 0; x < scan.n; ++x) {
      if ((masks[i] >> x) & 1) neg_image |= std::uint32_t{1} << a.neg(x);
    }
    const std::uint32_t g_mask = scan.full & ~neg_image;
    auto it = index_of_mask.find(g_mask);
    if (it == index_of_mask.end()) {
      throw InputError(
          "the involution image is not a prime filter; the algebra is not three-valued");
    }
    g[i] = it->second;
  }

  auto comparable = [&](std::size_t i, std::size_t j) {
    return (masks[i] & ~masks[j]) == 0 || (masks[j] & ~masks[i]) == 0;
  };
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (g[g[i]] != i) {
      throw InputError("the filter involution is not an involution; the algebra is not three-valued");
    }
    if (!comparable(i, g[i])) {
      throw InputError("a filter is incomparable with its involution image");
    }
    for (std::size_t j = 0; j < masks.size(); ++j) {
      const bool same_chain = (j == i) || (j == g[i]);
      if (comparable(i, j) != same_chain) {
        throw InputError("prime filter inclusion does not split into chains of at most two");
      }
    }
  }

  std::vector<std::string> names;
  names.reserve(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    names.push_back("P" + std::to_string(i));
  }
  UniversePtr filter_universe = make_universe(std::move(names));

  std::vector<std::size_t> assignment(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    assignment[i] = std::min(i, g[i]);
  }

  FilterSpace fs;
  fs.filters.reserve(masks.size());
  for (auto mask : masks) {
    fs.filters.push_back(PrimeFilter{mask_to_members(mask, scan.n)});
  }
  fs.filter_universe = filter_universe;
  fs.space = share(Partition(filter_universe, assignment));
  fs.g = std::move(g);
  return fs;
}

Partition comparability_relation(const FiniteAlgebra& a, std::size_t max_elements) {
  return *filter_space(a, max_elements).space;
}

ObjectSet stone_map(const FiniteAlgebra& a, int x, const FilterSpace& fs) {
  if (x < 0 || static_cast<std::size_t>(x) >= a.size()) {
    throw Error("element index out of range");
  }
  ObjectSet s = ObjectSet::empty_set(fs.filter_universe);
  for (std::size_t i = 0; i < fs.filters.size(); ++i) {
    if (fs.filters[i].contains(x)) s.insert(i);
  }
  return s;
}

Representation represent(const FiniteAlgebra& a, std::size_t max_elements) {
  if (!check_axioms(a).all_passed()) {
    throw InputError("the algebra fails the axiom checks and cannot be represented");
  }
  Representation rep;
  rep.space = filter_space(a, max_elements);
  const FilterSpace& fs = rep.space;
  const int n = static_cast<int>(a.size());

  std::vector<ObjectSet> s;
  s.reserve(n);
  for (int x = 0; x < n; ++x) s.push_back(stone_map(a, x, fs));
  rep.h.reserve(n);
  for (int x = 0; x < n; ++x) {
    rep.h.push_back(rough_set(fs.space, lower(*fs.space, s[x]), upper(*fs.space, s[x])));
  }

  VerificationReport& checks = rep.checks;

  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n && ok; ++y) {
        if (s[x] == s[y]) {
          ok = false;
          cx = elem2(a, x, y);
        }
      }
    }
    checks.add("stone map injective", ok, cx);
  }
  {
    bool ok = s[a.zero()].is_empty() && s[a.one()] == ObjectSet::full_set(fs.filter_universe);
    std::string cx = ok ? "" : "bounds";
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        if (s[a.meet(x, y)] != set_intersection(s[x], s[y]) ||
            s[a.join(x, y)] != set_union(s[x], s[y])) {
          ok = false;
          cx = elem2(a, x, y);
        }
      }
    }
    checks.add("stone map lattice homomorphism", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (std::size_t b = 0; b < fs.space->block_count() && ok; ++b) {
      if (fs.space->block(b).count() > 2) {
        ok = false;
        cx = "chain " + set_label(fs.space->block(b));
      }
    }
    checks.add("filter chains have length at most two", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (std::size_t i = 0; i < fs.filters.size() && ok; ++i) {
      if (fs.g[fs.g[i]] != i ||
          fs.space->class_of(i) != fs.space->class_of(fs.g[i])) {
        ok = false;
        cx = "P" + std::to_string(i);
      }
    }
    // g reverses inclusion: P <= Q forces g(Q) <= g(P).
    const FilterScan scan(a);
    std::vector<std::uint32_t> masks;
    for (const auto& f : fs.filters) masks.push_back(members_to_mask(f.members, scan.n));
    for (std::size_t i = 0; i < masks.size() && ok; ++i) {
      for (std::size_t j = 0; j < masks.size() && ok; ++j) {
        if ((masks[i] & ~masks[j]) == 0 &&
            (masks[fs.g[j]] & ~masks[fs.g[i]]) != 0) {
          ok = false;
          cx = "P" + std::to_string(i) + ", P" + std::to_string(j);
        }
      }
    }
    checks.add("involution pairs filters within chains", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n && ok; ++y) {
        if (rep.h[x] == rep.h[y]) {
          ok = false;
          cx = elem2(a, x, y);
        }
      }
    }
    checks.add("embedding injective", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        if (!(rep.h[a.meet(x, y)] == meet(rep.h[x], rep.h[y]))) {
          ok = false;
          cx = elem2(a, x, y);
        }
      }
    }
    checks.add("embedding preserves meet", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        if (!(rep.h[a.join(x, y)] == join(rep.h[x], rep.h[y]))) {
          ok = false;
          cx = elem2(a, x, y);
        }
      }
    }
    checks.add("embedding preserves join", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      if (!(rep.h[a.neg(x)] == negation(rep.h[x]))) {
        ok = false;
        cx = "x=" + a.name(x);
      }
    }
    checks.add("embedding preserves negation", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      if (!(rep.h[a.nabla(x)] == possibility(rep.h[x]))) {
        ok = false;
        cx = "x=" + a.name(x);
      }
    }
    checks.add("embedding preserves possibility", ok, cx);
  }
  {
    const bool ok = rep.h[a.one()] == rough_one(fs.space);
    checks.add("embedding preserves one", ok, ok ? "" : "x=" + a.name(a.one()));
  }
  {
    // Injectivity route via determination: h(x) coincides with the pair of
    // images (s(delta x), s(nabla x)), which determines x.
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      if (rep.h[x].lower_part() != s[a.delta(x)] || rep.h[x].upper_part() != s[a.nabla(x)]) {
        ok = false;
        cx = "x=" + a.name(x);
      }
    }
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        if (a.delta(x) == a.delta(y) && a.nabla(x) == a.nabla(y) && x != y) {
          ok = false;
          cx = elem2(a, x, y);
        }
      }
    }
    checks.add("embedding matches the (delta, nabla) signature", ok, cx);
  }

  return rep;
}

VerificationReport verify_representation_identities(const FiniteAlgebra& a,
                                                    std::size_t max_elements) {
  const FilterSpace fs = filter_space(a, max_elements);
  const int n = static_cast<int>(a.size());
  const Partition& space = *fs.space;

  std::vector<ObjectSet> s;
  s.reserve(n);
  for (int x = 0; x < n; ++x) s.push_back(stone_map(a, x, fs));

  VerificationReport report;
  auto check_each = [&](std::string name, auto pred) {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      if (!pred(x)) {
        ok = false;
        cx = "x=" + a.name(x);
      }
    }
    report.add(std::move(name), ok, cx);
  };

  check_each("Ms(nabla x) = s(nabla x)",
             [&](int x) { return upper(space, s[a.nabla(x)]) == s[a.nabla(x)]; });
  check_each("Ms(x) = s(nabla x)", [&](int x) { return upper(space, s[x]) == s[a.nabla(x)]; });
  check_each("Ls(delta x) = s(delta x)",
             [&](int x) { return lower(space, s[a.delta(x)]) == s[a.delta(x)]; });
  check_each("Ls(x) = s(delta x)", [&](int x) { return lower(space, s[x]) == s[a.delta(x)]; });
  check_each("s(~nabla x) = ~Ms(x)",
             [&](int x) { return s[a.neg(a.nabla(x))] == complement(upper(space, s[x])); });
  check_each("s(~delta x) = ~Ls(x)",
             [&](int x) { return s[a.neg(a.delta(x))] == complement(lower(space, s[x])); });

  {
    bool ok = true;
    std::string cx;
    for (std::size_t i = 0; i < fs.filters.size() && ok; ++i) {
      const auto& gp = fs.filters[fs.g[i]].members;
      const auto& p = fs.filters[i].members;
      if (!std::includes(p.begin(), p.end(), gp.begin(), gp.end())) continue;
      for (int x = 0; x < n && ok; ++x) {
        if (fs.filters[i].contains(a.nabla(x)) && !fs.filters[i].contains(x)) {
          ok = false;
          cx = "x=" + a.name(x) + ", P=P" + std::to_string(i);
        }
      }
    }
    report.add("nabla x in P implies x in P when g(P) <= P", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (std::size_t i = 0; i < fs.filters.size() && ok; ++i) {
      const auto& gp = fs.filters[fs.g[i]].members;
      const auto& p = fs.filters[i].members;
      if (!std::includes(p.begin(), p.end(), gp.begin(), gp.end())) continue;
      for (int x = 0; x < n && ok; ++x) {
        if (fs.filters[fs.g[i]].contains(x) && !fs.filters[fs.g[i]].contains(a.delta(x))) {
          ok = false;
          cx = "x=" + a.name(x) + ", P=P" + std::to_string(i);
        }
      }
    }
    report.add("x in g(P) implies delta x in g(P) when g(P) <= P", ok, cx);
  }

  return report;
}

FiniteAlgebra import_rough_algebra(const PartitionPtr& p, std::size_t max_universe) {
  const auto elems = enumerate_rough_sets(p, max_universe);
  const std::size_t n = elems.size();

  std::map<std::pair<std::uint64_t, std::uint64_t>, int> index;
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(std::make_pair(elems[i].lower_part().mask(), elems[i].upper_part().mask()),
                  static_cast<int>(i));
    names.push_back(rough_label(elems[i]));
  }
  auto locate = [&](const RoughSet& r) {
    auto it = index.find({r.lower_part().mask(), r.upper_part().mask()});
    if (it == index.end()) {
      throw Error("operation result escaped the rough-set carrier");
    }
    return it->second;
  };

  std::vector<std::vector<int>> meet_t(n, std::vector<int>(n));
  std::vector<std::vector<int>> join_t(n, std::vector<int>(n));
  std::vector<int> neg_t(n);
  std::vector<int> nabla_t(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_t[i] = locate(negation(elems[i]));
    nabla_t[i] = locate(possibility(elems[i]));
    for (std::size_t j = 0; j < n; ++j) {
      meet_t[i][j] = locate(meet(elems[i], elems[j]));
      join_t[i][j] = locate(join(elems[i], elems[j]));
    }
  }
  const int one = locate(rough_one(p));
  return FiniteAlgebra::from_tables(std::move(names), std::move(meet_t), std::move(join_t),
                                    std::move(neg_t), std::move(nabla_t), one);
}

VerificationReport verify_derived_structure(const FiniteAlgebra& a) {
  const int n = static_cast<int>(a.size());
  VerificationReport report;

  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n && ok; ++y) {
        if (a.delta(x) == a.delta(y) && a.nabla(x) == a.nabla(y)) {
          ok = false;
          cx = elem2(a, x, y);
        }
      }
    }
    report.add("determination: (delta x, nabla x) determines x", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      const int lhs = a.meet(x, a.neg(x));
      for (int y = 0; y < n && ok; ++y) {
        if (!a.leq(lhs, a.join(y, a.neg(y)))) {
          ok = false;
          cx = elem2(a, x, y);
        }
      }
    }
    report.add("kleene law", ok, cx);
  }
  {
    auto impl = [&](int x, int y) {
      return a.join(a.join(a.neg(a.nabla(x)), y), a.meet(a.nabla(a.neg(x)), a.nabla(y)));
    };
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        const int xy = impl(x, y);
        for (int z = 0; z < n && ok; ++z) {
          if (a.leq(a.meet(x, z), y) != a.leq(z, xy)) {
            ok = false;
            cx = elem3(a, x, y, z);
          }
        }
      }
    }
    report.add("heyting residuation", ok, cx);
  }
  if (auto c = a.center()) {
    bool ok = true;
    std::string cx;
    for (int x = 0; x < n && ok; ++x) {
      if (a.meet(a.join(a.delta(x), *c), a.nabla(x)) != x) {
        ok = false;
        cx = "x=" + a.name(x);
      }
    }
    report.add("center law", ok, cx);
  }

  return report;
}

}  // namespace rough3
