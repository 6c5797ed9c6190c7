#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "grouptest/magma.hpp"
#include "grouptest/oracle.hpp"

namespace grouptest {

// f_gamma: C_m -> Gamma, the a-th "power" of gamma built only from products
// that stay well defined when the operation is not associative:
//   f(1) = gamma
//   f(a) = gamma o f(a-1)        for odd a in [2, m)
//   f(a) = f(a/2) o f(a/2)       for even a in [2, m)
//   f(0) = gamma o f(m-1)
// For m == 1 the only exponent is 0 and f(0) = gamma without a product.
// One evaluation issues at most 2*ceil(log2 m) + 1 calls to O2.
Label power_map(Oracle& oracle, Label gamma, std::uint64_t a, std::uint64_t m);

// Number of O2 calls power_map(., ., a, m) issues, computed without an oracle.
std::uint64_t power_map_cost(std::uint64_t a, std::uint64_t m);

// 2*ceil(log2 m) + 1.
std::uint64_t power_map_cost_bound(std::uint64_t m);

// power_map with an optional per-gamma cache keyed by exponent. Tracks how
// many O2 calls the uncached evaluation would have made.
class PowerMap {
 public:
  PowerMap(Oracle& oracle, Label gamma, std::uint64_t m, bool memoize);

  Label operator()(std::uint64_t a);
  Label gamma() const { return gamma_; }
  std::uint64_t raw_o2_calls() const { return raw_o2_; }

 private:
  Label eval(std::uint64_t a);

  Oracle& oracle_;
  Label gamma_;
  std::uint64_t m_;
  bool memoize_;
  std::unordered_map<std::uint64_t, Label> cache_;
  std::uint64_t raw_o2_ = 0;
};

// f_gamma(a) for every a in [0, m) evaluated directly on a table with
// m == t.size(); entry a is the element f_gamma(a).
std::vector<Element> power_table(const MagmaTable& t, Element gamma);

}  // namespace grouptest
