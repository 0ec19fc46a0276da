#include "rough3/partition_gen.hpp"

#include <algorithm>
#include <string>

#include "rough3/error.hpp"

namespace rough3 {

UniversePtr numbered_universe(std::size_t n) {
  if (n == 0) throw InputError("universe needs at least one object");
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  return make_universe(std::move(ids));
}

std::vector<Partition> all_partitions(const UniversePtr& universe) {
  if (!universe) throw Error("null universe");
  const std::size_t n = universe->size();
  std::vector<Partition> out;
  // Restricted growth strings: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    out.emplace_back(universe, a);
    // Advance to the next string in lexicographic order.
    std::size_t i = n;
    while (i-- > 1) {
      const std::size_t bound = prefix_max[i - 1] + 1;
      if (a[i] < bound) {
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          a[j] = 0;
          prefix_max[j] = prefix_max[j - 1];
        }
        break;
      }
      if (i == 1) return out;
    }
    if (n == 1) return out;
  }
}

Partition random_partition(const UniversePtr& universe, std::mt19937_64& rng) {
  if (!universe) throw Error("null universe");
  const std::size_t n = universe->size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> labels(n);
  for (auto& l : labels) l = pick(rng);
  return Partition(universe, labels);
}

}  // namespace rough3
