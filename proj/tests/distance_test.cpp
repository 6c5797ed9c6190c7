#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "grouptest/distance.hpp"
#include "grouptest/edit_script.hpp"
#include "grouptest/errors.hpp"

namespace grouptest {
namespace {

using testing::exhaustive_min_hamming;

TEST(MinHammingToCyclic, Examples) {
  EXPECT_EQ(min_hamming_to_cyclic(build_cyclic(5)).value, 0u);
  // Exhaustive search over the 24 bijections gives 4.
  const MagmaTable klein = build_product(AbelianGroupSpec({2, 2}));
  EXPECT_EQ(min_hamming_to_cyclic(klein).value, 4u);
  EXPECT_EQ(min_hamming_to_cyclic(build_cyclic(5).with_entry(1, 2, 0)).value, 1u);
  EXPECT_EQ(min_hamming_to_cyclic(build_product(AbelianGroupSpec({2, 3}))).value, 0u);
}

TEST(MinHammingToCyclic, CyclicTablesAreAtZero) {
  for (std::size_t m = 1; m <= 8; ++m) EXPECT_EQ(min_hamming_to_cyclic(build_cyclic(m)).value, 0u);
}

TEST(MinHammingToCyclic, WitnessAchievesValue) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const MagmaTable t = perturb(build_cyclic(n), (rep * n) % (n * n + 1), rng());
      const auto d = min_hamming_to_cyclic(t);
      EXPECT_EQ(hamming_distance(relabel(t, d.witness), build_cyclic(n)), d.value);
    }
  }
}

TEST(MinHammingBetween, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
      std::vector<Element> a(n * n), b(n * n);
      for (auto& v : a) v = pick(rng);
      for (auto& v : b) v = pick(rng);
      const MagmaTable ta(n, a), tb(n, b);
      ASSERT_EQ(min_hamming_between(ta, tb).value, exhaustive_min_hamming(ta, tb)) << n;
    }
  }
}

TEST(MinHammingBetween, GroupPairBaselines) {
  const MagmaTable klein = build_product(AbelianGroupSpec({2, 2}));
  EXPECT_EQ(min_hamming_between(build_cyclic(4), klein).value, 4u);
  EXPECT_EQ(min_hamming_between(build_cyclic(6), testing::symmetric_group_s3()).value, 12u);
  EXPECT_EQ(min_hamming_between(testing::symmetric_group_s3(), build_cyclic(6)).value, 12u);
  // n = 8 exercises the full cap.
  EXPECT_EQ(min_hamming_to_cyclic(build_product(AbelianGroupSpec({2, 4}))).value, 16u);
  EXPECT_EQ(min_hamming_to_cyclic(build_product(AbelianGroupSpec({2, 2, 2}))).value, 28u);
}

TEST(MinHammingToCyclic, RelabelingInvariance) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 2; n <= 6; ++n) {
    const MagmaTable t = perturb(build_cyclic(n), n, rng());
    const std::size_t base = min_hamming_to_cyclic(t).value;
    std::vector<Element> sigma(n);
    std::iota(sigma.begin(), sigma.end(), Element{0});
    do {
      ASSERT_EQ(min_hamming_to_cyclic(relabel(t, sigma)).value, base);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST(MinHammingToCyclic, CapAndSizeErrors) {
  EXPECT_THROW(min_hamming_to_cyclic(build_cyclic(9)), CapacityError);
  EXPECT_THROW(min_hamming_between(build_cyclic(3), build_cyclic(4)), InputError);
}

TEST(DeltaFar, Examples) {
  EXPECT_FALSE(is_delta_far_from_cyclic(build_cyclic(4), Rational(1, 23)));
  EXPECT_TRUE(is_delta_far_from_cyclic(build_product(AbelianGroupSpec({2, 2})), Rational(1, 23)));
  EXPECT_FALSE(is_delta_far_from_cyclic(build_cyclic(4), Rational(1, 1)));
  // Klein is at 4/16 exactly.
  EXPECT_TRUE(is_delta_far_from_cyclic(build_product(AbelianGroupSpec({2, 2})), Rational(1, 4)));
  EXPECT_FALSE(is_delta_far_from_cyclic(build_product(AbelianGroupSpec({2, 2})), Rational(5, 16)));
  EXPECT_THROW(is_delta_far_from_cyclic(build_cyclic(9), Rational(1, 23)), CapacityError);
}

TEST(EditScriptCost, Examples) {
  EXPECT_EQ(edit_script_cost({{Exchange{0, 1, 2}}}, 3), 1u);
  EXPECT_EQ(edit_script_cost({{Delete{2}}}, 4), 7u);
  EXPECT_EQ(edit_script_cost(deletion_script(10, 2), 10), 36u);
  // Insert at size 2 needs 5 values and may reference the new element (id 2).
  EXPECT_EQ(edit_script_cost({{Insert{{0, 1, 2, 2, 0}}}}, 2), 5u);
  EXPECT_EQ(edit_script_cost({{Insert{{0, 1, 2, 2, 0}}, Delete{0}, Exchange{1, 2, 2}}}, 2),
            5u + 5u + 1u);
}

TEST(EditScriptCost, RejectsMalformed) {
  EXPECT_THROW(edit_script_cost({{Exchange{0, 3, 0}}}, 3), InputError);
  EXPECT_THROW(edit_script_cost({{Delete{0}, Delete{0}}}, 3), InputError);
  EXPECT_THROW(edit_script_cost({{Insert{{0, 1}}}}, 2), InputError);
  EXPECT_THROW(edit_script_cost({{Insert{{0, 1, 9, 0, 0}}}}, 2), InputError);
  EXPECT_THROW(deletion_script(3, 4), InputError);
}

TEST(EditScriptCost, DeletionsMatchClosedForm) {
  for (std::uint64_t n = 0; n <= 50; ++n) {
    for (std::uint64_t j = 0; j <= n; ++j) {
      ASSERT_EQ(edit_script_cost(deletion_script(n, j), n), j * (2 * n - j)) << n << " " << j;
    }
  }
}

}  // namespace
}  // namespace grouptest
