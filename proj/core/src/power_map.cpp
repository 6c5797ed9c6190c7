#include "grouptest/power_map.hpp"

#include "grouptest/errors.hpp"
#include "grouptest/number_theory.hpp"

namespace grouptest {

namespace {

void check_exponent(std::uint64_t a, std::uint64_t m) {
  if (m == 0 || a >= m) throw InputError("power map exponent must lie in [0, m)");
}

}  // namespace

Label power_map(Oracle& oracle, Label gamma, std::uint64_t a, std::uint64_t m) {
  check_exponent(a, m);
  PowerMap f(oracle, gamma, m, /*memoize=*/false);
  return f(a);
}

std::uint64_t power_map_cost(std::uint64_t a, std::uint64_t m) {
  check_exponent(a, m);
  std::uint64_t cost = 0;
  if (a == 0) {
    if (m == 1) return 0;
    a = m - 1;
    cost = 1;
  }
  while (a > 1) {
    a = (a % 2 == 1) ? a - 1 : a / 2;
    ++cost;
  }
  return cost;
}

std::uint64_t power_map_cost_bound(std::uint64_t m) { return 2 * std::uint64_t{ceil_log2(m)} + 1; }

PowerMap::PowerMap(Oracle& oracle, Label gamma, std::uint64_t m, bool memoize)
    : oracle_(oracle), gamma_(gamma), m_(m), memoize_(memoize) {
  if (m_ == 0) throw InputError("power map needs m >= 1");
}

Label PowerMap::operator()(std::uint64_t a) {
  raw_o2_ += power_map_cost(a, m_);
  return eval(a);
}

Label PowerMap::eval(std::uint64_t a) {
  if (a == 1 || (a == 0 && m_ == 1)) return gamma_;
  if (memoize_) {
    if (auto it = cache_.find(a); it != cache_.end()) return it->second;
  }
  Label out;
  if (a == 0) {
    out = oracle_.multiply(gamma_, eval(m_ - 1));
  } else if (a % 2 == 1) {
    out = oracle_.multiply(gamma_, eval(a - 1));
  } else {
    const Label half = eval(a / 2);
    out = oracle_.multiply(half, half);
  }
  if (memoize_) cache_.emplace(a, out);
  return out;
}

std::vector<Element> power_table(const MagmaTable& t, Element gamma) {
  const std::size_t m = t.size();
  if (gamma >= m) throw InputError("gamma outside the table");
  std::vector<Element> f(m);
  if (m == 1) {
    f[0] = gamma;
    return f;
  }
  f[1] = gamma;
  for (std::size_t a = 2; a < m; ++a) f[a] = (a % 2 == 1) ? t(gamma, f[a - 1]) : t(f[a / 2], f[a / 2]);
  f[0] = t(gamma, f[m - 1]);
  return f;
}

}  // namespace grouptest
