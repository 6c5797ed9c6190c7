#pragma once

#include <span>

#include "grouptest/magma.hpp"
#include "grouptest/rational.hpp"

namespace grouptest {

// Exact probabilities behind the tester's two checks, by enumeration over a
// materialized table of order m.

// Pr_{x,y in C_m}[f_gamma(x+y) = f_gamma(x) o f_gamma(y)].
Rational exact_agreement_probability(const MagmaTable& t, Element gamma);

// Pr_{u in C_m}[f_gamma(x+u) = f_gamma(y+u)].
Rational exact_collision_probability(const MagmaTable& t, Element gamma, std::uint64_t x,
                                     std::uint64_t y);

struct WellBehavingProbabilities {
  Rational homomorphism;  // Pr_u[f(x+u) = f(x) o f(u)]
  Rational cancellation;  // Pr_u[(f(x) o f(u)) o f(-u) = f(x)]
};

// f maps Z_n (n = f.size()) into the table's ground set.
WellBehavingProbabilities well_behaving_probabilities(const MagmaTable& t,
                                                      std::span<const Element> f,
                                                      std::uint64_t x);
// Both probabilities at least 4/5.
bool is_well_behaving(const MagmaTable& t, std::span<const Element> f, std::uint64_t x);

}  // namespace grouptest
