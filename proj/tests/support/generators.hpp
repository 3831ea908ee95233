#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "matchless/family.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline matchless::SubsetWord random_subset(Rng& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  matchless::SubsetWord s(n);
  for (std::size_t e = 1; e <= n; ++e)
    if (coin(rng)) s.insert(e);
  return s;
}

// Up to max_members random subsets (duplicates collapse).
inline matchless::Family random_family(Rng& rng, std::size_t n, std::size_t max_members, double density = 0.5) {
  std::uniform_int_distribution<std::size_t> count(0, max_members);
  std::vector<matchless::SubsetWord> sets;
  const std::size_t target = count(rng);
  for (std::size_t i = 0; i < target; ++i) sets.push_back(random_subset(rng, n, density));
  return matchless::Family(n, std::move(sets));
}

inline matchless::SubsetWord random_k_subset(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  return matchless::SubsetWord::from_elements(n, pool);
}

inline matchless::Family random_uniform_family(Rng& rng, std::size_t n, std::size_t k, std::size_t max_members) {
  std::uniform_int_distribution<std::size_t> count(0, max_members);
  std::vector<matchless::SubsetWord> sets;
  const std::size_t target = count(rng);
  for (std::size_t i = 0; i < target; ++i) sets.push_back(random_k_subset(rng, n, k));
  return matchless::Family(n, std::move(sets));
}

}  // namespace gen
