#include "grouptest/diagnostics.hpp"

#include "grouptest/errors.hpp"
#include "grouptest/power_map.hpp"

namespace grouptest {

Rational exact_agreement_probability(const MagmaTable& t, Element gamma) {
  const std::size_t m = t.size();
  const auto f = power_table(t, gamma);
  std::uint64_t hits = 0;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) hits += f[(x + y) % m] == t(f[x], f[y]);
  }
  return {hits, std::uint64_t{m} * m};
}

Rational exact_collision_probability(const MagmaTable& t, Element gamma, std::uint64_t x,
                                     std::uint64_t y) {
  const std::size_t m = t.size();
  if (x >= m || y >= m) throw InputError("x and y must lie in [0, m)");
  const auto f = power_table(t, gamma);
  std::uint64_t hits = 0;
  for (std::size_t u = 0; u < m; ++u) hits += f[(x + u) % m] == f[(y + u) % m];
  return {hits, m};
}

WellBehavingProbabilities well_behaving_probabilities(const MagmaTable& t,
                                                      std::span<const Element> f,
                                                      std::uint64_t x) {
  const std::size_t n = f.size();
  if (n == 0 || x >= n) throw InputError("x must lie in the map's domain");
  for (Element v : f) {
    if (v >= t.size()) throw InputError("map image outside the table");
  }
  std::uint64_t hom = 0;
  std::uint64_t cancel = 0;
  for (std::size_t u = 0; u < n; ++u) {
    const Element xu = t(f[x], f[u]);
    hom += f[(x + u) % n] == xu;
    cancel += t(xu, f[(n - u) % n]) == f[x];
  }
  return {{hom, n}, {cancel, n}};
}

bool is_well_behaving(const MagmaTable& t, std::span<const Element> f, std::uint64_t x) {
  const auto p = well_behaving_probabilities(t, f, x);
  const Rational threshold(4, 5);
  return p.homomorphism >= threshold && p.cancellation >= threshold;
}

}  // namespace grouptest
