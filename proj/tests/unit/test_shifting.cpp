#include <gtest/gtest.h>

#include "generators.hpp"
#include "matchless/constructions.hpp"
#include "matchless/errors.hpp"
#include "matchless/matchings.hpp"
#include "matchless/shifting.hpp"
#include "oracles.hpp"

using namespace matchless;

namespace {

SubsetWord set_of(std::size_t n, std::initializer_list<std::size_t> e) { return SubsetWord::from_elements(n, e); }

}  // namespace

TEST(Dominates, Examples) {
  EXPECT_TRUE(dominates(set_of(3, {2, 3}), set_of(3, {1, 2})));
  EXPECT_FALSE(dominates(set_of(3, {1, 3}), set_of(3, {2, 3})));
  EXPECT_TRUE(dominates(set_of(3, {1, 3}), set_of(3, {1, 3})));
  EXPECT_TRUE(dominates(SubsetWord(3), SubsetWord(3)));
  EXPECT_THROW(dominates(set_of(3, {1}), set_of(3, {1, 2})), RangeError);
}

TEST(ShiftPair, Validates) {
  EXPECT_THROW(ShiftPair(2, 2, 3), RangeError);
  EXPECT_THROW(ShiftPair(2, 1, 3), RangeError);
  EXPECT_THROW(ShiftPair(1, 4, 3), RangeError);
  EXPECT_THROW(ShiftPair(0, 1, 3), RangeError);
}

TEST(ShiftIJ, Examples) {
  EXPECT_EQ(shift_ij(Family(3, {set_of(3, {2, 3})}), ShiftPair(1, 2, 3)), Family(3, {set_of(3, {1, 3})}));
  const Family collide(3, {set_of(3, {1, 3}), set_of(3, {2, 3})});
  EXPECT_EQ(shift_ij(collide, ShiftPair(1, 2, 3)), collide);
  const Family shifted = family_P(1, 4, 2);
  for (std::size_t j = 2; j <= 6; ++j)
    for (std::size_t i = 1; i < j; ++i) EXPECT_EQ(shift_ij(shifted, ShiftPair(i, j, 6)), shifted);
}

TEST(ShiftClosure, Examples) {
  EXPECT_EQ(shift_closure(Family(3, {set_of(3, {2, 3})})), Family(3, {set_of(3, {1, 2})}));
  const Family h = hilton_milner_H(7, 3, 3);
  EXPECT_EQ(shift_closure(h), h);
  EXPECT_TRUE(shift_closure(Family(5)).empty());
}

TEST(IsShifted, Examples) {
  EXPECT_TRUE(is_shifted(Family(3, {set_of(3, {1, 2}), set_of(3, {1, 3}), set_of(3, {2, 3})})));
  EXPECT_FALSE(is_shifted(Family(3, {set_of(3, {2, 3})})));
  EXPECT_TRUE(is_shifted(Family(3)));
  EXPECT_TRUE(is_shifted(frankl_A(8, 3, 3, 2)));
  EXPECT_TRUE(is_shifted(hilton_milner_H(9, 3, 4)));
  EXPECT_FALSE(is_shifted(star(5, 2, 3)));
}

TEST(ShiftingProperties, ShiftNeverIncreasesNu) {
  gen::Rng rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 2 + rng() % 9;
    const Family f = gen::random_family(rng, n, 40, 0.4);
    const std::size_t j = 2 + rng() % (n - 1);
    const std::size_t i = 1 + rng() % (j - 1);
    const Family g = shift_ij(f, ShiftPair(i, j, n));
    ASSERT_EQ(g.size(), f.size());
    ASSERT_LE(nu(g).value, nu(f).value) << serialize_family(f) << i << ' ' << j;
  }
}

TEST(ShiftingProperties, ShiftednessMatchesBruteForceAndClosure) {
  gen::Rng rng(42);
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t n = 1 + rng() % 7;
    // Mix in closures so that both answers occur often.
    Family f = gen::random_family(rng, n, 25, 0.5);
    if (iter % 2 == 0) f = shift_closure(f);
    const bool shifted = is_shifted(f);
    ASSERT_EQ(shifted, oracles::is_shifted(oracles::masks_of(f), static_cast<int>(n))) << serialize_family(f);
    const Family c = shift_closure(f);
    ASSERT_EQ(shifted, c == f);
    ASSERT_TRUE(is_shifted(c));
    ASSERT_EQ(shift_closure(c), c);
    ASSERT_EQ(c.size(), f.size());
  }
}

TEST(ShiftingProperties, DominanceIsAPartialOrderOnLayers) {
  for (std::size_t k = 0; k <= 4; ++k) {
    const Family l = full_layer(7, k);
    for (const auto& a : l)
      for (const auto& b : l) {
        const bool ab = dominates(a, b), ba = dominates(b, a);
        if (ab && ba) ASSERT_EQ(a, b);
        ASSERT_EQ(ab, oracles::dominates(oracles::masks_of(Family(7, {a}))[0], oracles::masks_of(Family(7, {b}))[0]));
        if (!ab) continue;
        for (const auto& c : l)
          if (dominates(b, c)) ASSERT_TRUE(dominates(a, c));
      }
  }
}
