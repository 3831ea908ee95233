#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "matchless/constructions.hpp"
#include "matchless/errors.hpp"
#include "matchless/formulas.hpp"
#include "matchless/matchings.hpp"
#include "oracles.hpp"

using namespace matchless;

namespace {

SubsetWord set_of(std::size_t n, std::initializer_list<std::size_t> e) { return SubsetWord::from_elements(n, e); }

Family without_empty(const Family& f) {
  std::vector<SubsetWord> keep;
  for (const auto& s : f)
    if (!s.empty()) keep.push_back(s);
  return Family(f.ground_size(), keep);
}

// Lexicographically least k-matching (by member index) within the budget.
std::optional<std::vector<std::size_t>> least_bounded(const Family& f, std::size_t k, std::size_t budget) {
  std::vector<std::size_t> pick;
  auto dfs = [&](auto&& self, std::size_t start, SubsetWord used, std::size_t spent) -> bool {
    if (pick.size() == k) return true;
    for (std::size_t i = start; i < f.size(); ++i) {
      if (!f[i].is_disjoint(used) || spent + f[i].size() > budget) continue;
      pick.push_back(i);
      if (self(self, i + 1, used | f[i], spent + f[i].size())) return true;
      pick.pop_back();
    }
    return false;
  };
  if (dfs(dfs, 0, SubsetWord(f.ground_size()), 0)) return pick;
  return std::nullopt;
}

bool brute_cross_dependent(const std::vector<Family>& fs) {
  auto dfs = [&](auto&& self, std::size_t i, SubsetWord used, bool empty_used) -> bool {
    if (i == fs.size()) return false;
    for (const auto& s : fs[i]) {
      if (!s.is_disjoint(used)) continue;
      if (s.empty() && empty_used) continue;
      if (!self(self, i + 1, used | s, empty_used || s.empty())) return false;
    }
    return true;
  };
  return dfs(dfs, 0, SubsetWord(fs[0].ground_size()), false);
}

std::vector<Family> all_families_over(const Family& universe) {
  std::vector<Family> out;
  for (std::uint32_t pick = 0; pick < (1U << universe.size()); ++pick) {
    std::vector<SubsetWord> sets;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if ((pick >> i) & 1U) sets.push_back(universe[i]);
    out.emplace_back(universe.ground_size(), sets);
  }
  return out;
}

}  // namespace

TEST(Nu, Examples) {
  const NuResult pairs = nu(full_layer(6, 2));
  EXPECT_EQ(pairs.value, 3U);
  EXPECT_EQ(pairs.witness, (Matching{set_of(6, {1, 2}), set_of(6, {3, 4}), set_of(6, {5, 6})}));
  EXPECT_EQ(nu(family_P(1, 3, 1)).value, 2U);
  EXPECT_EQ(nu(Family(1, {SubsetWord(1), set_of(1, {1})})).value, 2U);
  EXPECT_EQ(nu(Family(9)).value, 0U);
  EXPECT_TRUE(nu(Family(9)).witness.empty());
}

TEST(Nu, LargeGroundSetFallsBackToBounds) {
  // Pairs {2i-1, 2i} on [80] plus a few overlapping long sets.
  std::vector<SubsetWord> sets;
  for (std::size_t i = 1; i <= 40; ++i) sets.push_back(set_of(80, {2 * i - 1, 2 * i}));
  sets.push_back(SubsetWord::interval(80, 1, 30));
  sets.push_back(SubsetWord::interval(80, 20, 70));
  EXPECT_EQ(nu(Family(80, sets)).value, 40U);
}

TEST(HasMatching, Examples) {
  EXPECT_FALSE(has_matching(frankl_A(6, 2, 3, 1), 3));
  EXPECT_TRUE(has_matching(without_empty(power_set(4)), 4));
  EXPECT_FALSE(has_matching(hilton_milner_H(6, 2, 3), 3));
  EXPECT_TRUE(has_matching(Family(3), 0));
  const auto w = find_matching(without_empty(power_set(4)), 4);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (Matching{set_of(4, {1}), set_of(4, {2}), set_of(4, {3}), set_of(4, {4})}));
}

TEST(BoundedMatching, Examples) {
  const auto w = find_bounded_matching(without_empty(power_set(5)), 2, 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (Matching{set_of(5, {1}), set_of(5, {2})}));
  EXPECT_FALSE(find_bounded_matching(Family(4, {set_of(4, {1, 2}), set_of(4, {3, 4})}), 2, 3));
  EXPECT_FALSE(find_bounded_matching(family_P(1, 4, 2), 1, 0));
  EXPECT_TRUE(find_bounded_matching(Family(2, {SubsetWord(2)}), 1, 0));
}

TEST(BoundedMatching, TightBudgetOnP) {
  // Sets of P(m,s,l) are large enough that no k <= l of them fit into
  // km + k - l total elements.
  for (std::size_t l = 1; l <= 3; ++l) {
    const Family p = family_P(1, 4, l);
    for (std::size_t k = 1; k <= l; ++k)
      if (2 * k >= l) EXPECT_FALSE(find_bounded_matching(p, k, 2 * k - l)) << l << ' ' << k;
  }
}

TEST(CrossDependence, Examples) {
  const std::vector<Family> tight = {full_layer(4, 2), Family(4)};
  EXPECT_TRUE(is_cross_dependent(tight).cross_dependent);

  const std::vector<Family> apart = {Family(2, {set_of(2, {1})}), Family(2, {set_of(2, {2})})};
  const auto r = is_cross_dependent(apart);
  EXPECT_FALSE(r.cross_dependent);
  ASSERT_TRUE(r.rainbow);
  EXPECT_EQ(*r.rainbow, (Matching{set_of(2, {1}), set_of(2, {2})}));

  const std::vector<Family> shared = {Family(2, {set_of(2, {1})}), Family(2, {set_of(2, {1})})};
  EXPECT_TRUE(is_cross_dependent(shared).cross_dependent);

  const std::vector<Family> mismatch = {Family(2), Family(3)};
  EXPECT_THROW(is_cross_dependent(mismatch), RangeError);
  EXPECT_THROW(is_cross_dependent(std::span<const Family>{}), RangeError);
}

TEST(CrossDependence, EmptySetUsedOnce) {
  const Family only_empty(3, {SubsetWord(3)});
  const std::vector<Family> twice = {only_empty, only_empty};
  EXPECT_TRUE(is_cross_dependent(twice).cross_dependent);
  const std::vector<Family> once = {only_empty, Family(3, {SubsetWord(3), set_of(3, {1})})};
  EXPECT_FALSE(is_cross_dependent(once).cross_dependent);
}

TEST(CrossDependence, ExhaustiveSmallTuplesSatisfyTheAveragingBound) {
  for (std::size_t n : {2U, 3U}) {
    const auto families = all_families_over(full_layer(n, 1));
    const Count bound = cross_dep_bound(n, 1, 2);
    std::size_t dependent = 0;
    for (const auto& a : families)
      for (const auto& b : families) {
        const std::vector<Family> pair = {a, b};
        const auto r = is_cross_dependent(pair);
        ASSERT_EQ(r.cross_dependent, brute_cross_dependent(pair));
        if (!r.cross_dependent) {
          ASSERT_TRUE(r.rainbow && a.contains((*r.rainbow)[0]) && b.contains((*r.rainbow)[1]));
          continue;
        }
        ++dependent;
        ASSERT_LE(Count(a.size() + b.size()), bound);
      }
    EXPECT_GT(dependent, 0U);
  }
}

TEST(CrossDependence, RandomTuplesAtSixTwoThree) {
  gen::Rng rng(5);
  const Count bound = cross_dep_bound(6, 2, 3);
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<Family> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(gen::random_uniform_family(rng, 6, 2, 15));
    // Knock out rainbow members until none is left.
    for (;;) {
      const auto r = is_cross_dependent(fs);
      if (r.cross_dependent) break;
      const std::size_t i = rng() % 3;
      std::vector<SubsetWord> keep;
      for (const auto& s : fs[i])
        if (s != (*r.rainbow)[i]) keep.push_back(s);
      fs[i] = Family(6, keep);
    }
    ASSERT_TRUE(brute_cross_dependent(fs));
    ASSERT_LE(Count(fs[0].size() + fs[1].size() + fs[2].size()), bound);
  }
}

TEST(Sampler, ShapeAndErrors) {
  const auto t = sample_disjoint_tuple(4, 2, 2, 0);
  ASSERT_EQ(t.size(), 2U);
  EXPECT_EQ(t[0].size(), 2U);
  EXPECT_TRUE(t[0].is_disjoint(t[1]));
  EXPECT_EQ(sample_disjoint_tuple(9, 3, 2, 17), sample_disjoint_tuple(9, 3, 2, 17));
  EXPECT_THROW(sample_disjoint_tuple(3, 2, 2, 0), RangeError);
}

TEST(Sampler, HitRateMatchesExpectation) {
  // E[sum 1{F_i in family_i}] = sum |family_i| / C(n,k).
  gen::Rng rng(8);
  const std::size_t n = 6, k = 2, s = 3;
  std::vector<Family> fs;
  for (std::size_t i = 0; i < s; ++i) fs.push_back(gen::random_uniform_family(rng, n, k, 12));
  double expected = 0;
  for (const auto& f : fs) expected += static_cast<double>(f.size()) / 15.0;

  const int samples = 100000;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < samples; ++i) {
    const auto t = sample_disjoint_tuple(n, k, s, static_cast<std::uint64_t>(i));
    double xi = 0;
    for (std::size_t j = 0; j < s; ++j) xi += fs[j].contains(t[j]) ? 1 : 0;
    sum += xi;
    sum_sq += xi * xi;
  }
  const double mean = sum / samples;
  const double se = std::sqrt((sum_sq / samples - mean * mean) / samples);
  EXPECT_LT(std::abs(mean - expected), 3 * se) << mean << " vs " << expected;
}

TEST(MatchingProperties, NuAgreesWithSubsetEnumeration) {
  gen::Rng rng(21);
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t n = 1 + rng() % 10;
    Family f = gen::random_family(rng, n, 18, 0.35);
    const auto masks = oracles::masks_of(f);
    const NuResult r = nu(f);
    ASSERT_EQ(r.value, oracles::nu_by_subsets(masks)) << serialize_family(f);
    ASSERT_EQ(r.witness.size(), r.value);
    ASSERT_TRUE(is_matching(r.witness));
    for (const auto& w : r.witness) ASSERT_TRUE(f.contains(w));
    for (std::size_t s = 0; s <= r.value + 1; ++s) ASSERT_EQ(has_matching(f, s), r.value >= s);
  }
}

TEST(MatchingProperties, BoundedSearchReturnsLeastWitness) {
  gen::Rng rng(22);
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t n = 2 + rng() % 8;
    const Family f = gen::random_family(rng, n, 16, 0.4);
    const std::size_t k = 1 + rng() % 3;
    ASSERT_EQ(find_bounded_matching(f, k, n).has_value(), has_matching(f, k));
    const std::size_t budget = rng() % (n + 1);
    const auto got = find_bounded_matching(f, k, budget);
    const auto want = least_bounded(f, k, budget);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (!got) continue;
    Matching expected;
    for (auto i : *want) expected.push_back(f[i]);
    ASSERT_EQ(*got, expected);
  }
}
