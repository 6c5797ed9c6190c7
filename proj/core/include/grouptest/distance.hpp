#pragma once

#include <cstddef>
#include <vector>

#include "grouptest/magma.hpp"
#include "grouptest/rational.hpp"

namespace grouptest {

// Exhaustive search is only attempted up to this ground-set size.
inline constexpr std::size_t kBruteForceMaxSize = 8;

struct BijectionDistance {
  std::size_t value;
  // sigma maps indices of the source table to indices of the target;
  // hamming_distance(relabel(source, sigma), target) == value.
  std::vector<Element> witness;
};

// min over bijections sigma of Ham(relabel(source, sigma), target). This is
// the exchange-only edit distance between same-size tables. Branch and bound
// over partial bijections; the result is the exact minimum. Throws
// InputError on size mismatch, CapacityError when n > kBruteForceMaxSize.
BijectionDistance min_hamming_between(const MagmaTable& source, const MagmaTable& target);

// Distance to the class of cyclic groups: target is build_cyclic(n).
BijectionDistance min_hamming_to_cyclic(const MagmaTable& t);

// True iff min_hamming_to_cyclic(t) >= delta * n^2.
bool is_delta_far_from_cyclic(const MagmaTable& t, const Rational& delta);

}  // namespace grouptest
