#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "configeo/configcount.hpp"
#include "configeo/error.hpp"

namespace configeo::count {

std::size_t distinct_classes(const PointSet& points, std::size_t k, double delta) {
  require(k >= 1, "distinct_classes needs k >= 1");
  require(k <= 4, "distinct_classes canonicalizes over (k+1)! relabelings; k must be <= 4");
  require(delta > 0.0, "distinct_classes needs delta > 0");
  const std::size_t arity = k + 1;
  const std::size_t n = points.size();
  if (n < arity) return 0;

  const std::size_t pairs = arity * k / 2;
  std::set<std::vector<long long>> classes;
  std::vector<std::size_t> subset(arity);
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<double> dist(arity * arity, 0.0);
  std::vector<std::size_t> perm(arity);
  std::vector<double> candidate(pairs), best(pairs);
  std::vector<long long> key(pairs);

  for (;;) {
    for (std::size_t a = 0; a < arity; ++a) {
      for (std::size_t b = a + 1; b < arity; ++b) {
        const double d = distance(points.point(subset[a]), points.point(subset[b]));
        dist[a * arity + b] = dist[b * arity + a] = d;
      }
    }
    std::iota(perm.begin(), perm.end(), 0);
    bool first = true;
    do {
      for (std::size_t a = 0; a < arity; ++a) {
        for (std::size_t b = a + 1; b < arity; ++b) {
          candidate[pair_index(a, b, k)] = dist[perm[a] * arity + perm[b]];
        }
      }
      if (first || std::lexicographical_compare(candidate.begin(), candidate.end(),
                                                best.begin(), best.end())) {
        best = candidate;
        first = false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t p = 0; p < pairs; ++p) key[p] = std::llround(best[p] / delta);
    classes.insert(key);

    // Next increasing subset.
    std::size_t pos = arity;
    while (pos-- > 0) {
      if (subset[pos] < n - arity + pos) break;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
    ++subset[pos];
    for (std::size_t q = pos + 1; q < arity; ++q) subset[q] = subset[q - 1] + 1;
  }
  return classes.size();
}

}  // namespace configeo::count
