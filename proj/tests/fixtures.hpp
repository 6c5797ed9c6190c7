#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "grouptest/magma.hpp"

namespace grouptest::testing {

// S_3 as permutations of {0,1,2} in lexicographic order, (p*q)(i) = p(q(i)).
inline MagmaTable symmetric_group_s3() {
  return MagmaTable::from_rows({{0, 1, 2, 3, 4, 5},
                                {1, 0, 4, 5, 2, 3},
                                {2, 3, 0, 1, 5, 4},
                                {3, 2, 5, 4, 0, 1},
                                {4, 5, 1, 0, 3, 2},
                                {5, 4, 3, 2, 1, 0}});
}

// min over all n! bijections, no pruning. Independent of the library search.
inline std::size_t exhaustive_min_hamming(const MagmaTable& source, const MagmaTable& target) {
  const std::size_t n = source.size();
  std::vector<Element> sigma(n);
  std::iota(sigma.begin(), sigma.end(), Element{0});
  std::size_t best = n * n;
  do {
    std::size_t cost = 0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) cost += sigma[source(x, y)] != target(sigma[x], sigma[y]);
    }
    best = std::min(best, cost);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

}  // namespace grouptest::testing
