#include <gtest/gtest.h>

#include "matchless/constructions.hpp"
#include "matchless/errors.hpp"
#include "matchless/formulas.hpp"
#include "matchless/matchings.hpp"
#include "matchless/oracle.hpp"
#include "matchless/shifting.hpp"
#include "oracles.hpp"

using namespace matchless;

namespace {

void expect_valid_witness(const OracleResult& r, std::size_t s) {
  EXPECT_EQ(Count(r.witness.size()), r.value);
  EXPECT_FALSE(has_matching(r.witness, s));
}

}  // namespace

TEST(OracleE, Examples) {
  const auto r32 = oracle_e(3, 2);
  EXPECT_EQ(r32.value, 4);
  EXPECT_EQ(r32.value, kleitman_value(3, 2));
  expect_valid_witness(r32, 2);

  const auto r53 = oracle_e(5, 3);
  EXPECT_EQ(r53.value, 26);
  EXPECT_EQ(r53.value, size_P(1, 3, 1));
  expect_valid_witness(r53, 3);

  const auto r64 = oracle_e(6, 4);
  EXPECT_EQ(r64.value, 58);
  EXPECT_EQ(r64.value, size_P(1, 4, 2));
  expect_valid_witness(r64, 4);
}

TEST(OracleE, MatchesExhaustiveSearchOnTinyGrounds) {
  for (int n = 1; n <= 4; ++n)
    for (std::size_t s = 2; s <= static_cast<std::size_t>(n) + 2; ++s) {
      const auto r = oracle_e(n, s);
      EXPECT_EQ(r.value, oracles::max_family_without_matching(oracles::all_masks(n), s)) << n << ' ' << s;
      expect_valid_witness(r, s);
    }
}

TEST(OracleE, ShiftedSearchAgreesAndReturnsShiftedWitness) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t s = 2; s <= n + 2; ++s) {
      const auto all = oracle_e(n, s, false);
      const auto shifted = oracle_e(n, s, true);
      EXPECT_EQ(all.value, shifted.value) << n << ' ' << s;
      EXPECT_TRUE(is_shifted(shifted.witness));
      expect_valid_witness(all, s);
      expect_valid_witness(shifted, s);
    }
}

TEST(OracleE, LowLayerVariant) {
  // Families of sets of size <= 2 on [5] without 3 disjoint members: all
  // 2-sets and nothing smaller is optimal.
  const auto r = oracle_e_upto(5, 3, 2);
  EXPECT_EQ(r.value, 10);
  EXPECT_EQ(oracle_e_upto(6, 4, 2).value, size_P_upto(1, 4, 2, 2));
  EXPECT_EQ(oracle_e_upto(4, 2, 4).value, oracle_e(4, 2).value);
}

TEST(OracleE, CapsAndRanges) {
  EXPECT_THROW(oracle_e(8, 3), CapExceeded);
  OracleLimits lower;
  lower.max_n = 5;
  EXPECT_THROW(oracle_e(6, 3, false, lower), CapExceeded);
  OracleLimits raised;
  raised.max_n = 9;
  EXPECT_THROW(oracle_e(8, 3, false, raised), CapExceeded);
  OracleLimits tiny;
  tiny.node_limit = 3;
  EXPECT_THROW(oracle_e(6, 3, false, tiny), CapExceeded);
  EXPECT_THROW(oracle_e(4, 1), RangeError);
}

TEST(OracleE, WarmStartKeepsTheAnswer) {
  OracleLimits warm;
  warm.warm_start = kleitman_value(6, 3);
  const auto r = oracle_e(6, 3, false, warm);
  EXPECT_EQ(r.value, 52);
  expect_valid_witness(r, 3);
  warm.warm_start = Count(53);
  EXPECT_THROW(oracle_e(6, 3, false, warm), std::logic_error);
}

TEST(OracleE, IsDeterministic) {
  const auto a = oracle_e(6, 3), b = oracle_e(6, 3);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(OracleEk, Examples) {
  EXPECT_EQ(oracle_ek(4, 2, 2).value, 3);
  const auto r = oracle_ek(6, 2, 3);
  EXPECT_EQ(r.value, 10);
  EXPECT_EQ(r.value, std::max(size_A1(6, 2, 3), size_A(6, 2, 3, 2)));
  expect_valid_witness(r, 3);
  EXPECT_EQ(oracle_ek(8, 2, 3).value, 13);
  EXPECT_EQ(oracle_ek(5, 3, 2).value, 10);  // n < sk: the whole layer
}

TEST(OracleEk, ShiftedReductionMatchesUnrestrictedSearch) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t k = 1; k <= 3 && k <= n; ++k)
      for (std::size_t s = 2; s <= 4; ++s) {
        if (binom(n, k) > 21) continue;
        const auto a = oracle_ek(n, k, s, true);
        const auto b = oracle_ek(n, k, s, false);
        EXPECT_EQ(a.value, b.value) << n << ' ' << k << ' ' << s;
        expect_valid_witness(a, s);
        expect_valid_witness(b, s);
        EXPECT_TRUE(is_shifted(a.witness));
        if (binom(n, k) <= 15)
          EXPECT_EQ(a.value, oracles::max_family_without_matching(oracles::k_masks(n, k), s)) << n << ' ' << k << ' ' << s;
      }
}

TEST(OracleEk, UpperBoundAndExtremalValueOnSmallGrid) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t s = 2; s <= 3; ++s)
      for (std::size_t n = s * k; n <= 11; ++n) {
        const auto r = oracle_ek(n, k, s);
        EXPECT_LE(r.value, frankl_upper(n, k, s));
        EXPECT_EQ(r.value, std::max(size_A(n, k, s, 1), size_A(n, k, s, k))) << n << ' ' << k << ' ' << s;
      }
}

TEST(OracleEk, CapsAndRanges) {
  EXPECT_THROW(oracle_ek(20, 5, 2), CapExceeded);
  EXPECT_THROW(oracle_ek(6, 2, 1), RangeError);
  EXPECT_THROW(oracle_ek(6, 7, 2), RangeError);
  EXPECT_THROW(oracle_ek(6, 0, 2), RangeError);
}

TEST(OracleEk, RegimePredicateIsNotAGuarantee) {
  // m = 2, l + t = 3, n = 6: the nominal regime predicate holds, but the
  // predicted value C(6,2) - C(4,2) = 9 is beaten by A_2 with 10 sets.
  // The predicate only stands in for a hypothesis with an unspecified s0.
  const Verdict regime = condition3_regime(2, 1, 2, 6);
  EXPECT_TRUE(regime.holds);
  EXPECT_TRUE(regime.regime_note);
  EXPECT_EQ(oracle_ek(6, 2, 3).value, 10);
  EXPECT_NE(oracle_ek(6, 2, 3).value, binom(6, 2) - binom(4, 2));
}
