#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matchless/family.hpp"

namespace matchless {

/// Pairwise disjoint members of a queried family, in canonical order (for
/// rainbow matchings: one entry per family, in family order).
using Matching = std::vector<SubsetWord>;

struct NuResult {
  std::size_t value = 0;
  Matching witness;
};

/// True when the sets are pairwise disjoint and distinct.
bool is_matching(std::span<const SubsetWord> sets);

/// Matching number with the lexicographically least maximum matching
/// (members compared by their canonical positions in f).
NuResult nu(const Family& f);

/// Lexicographically least s-matching, or nullopt when nu(f) < s.
std::optional<Matching> find_matching(const Family& f, std::size_t s);
bool has_matching(const Family& f, std::size_t s);

/// Lexicographically least k-matching whose member sizes sum to at most
/// budget, or nullopt.
std::optional<Matching> find_bounded_matching(const Family& f, std::size_t k, std::size_t budget);

struct CrossDependence {
  bool cross_dependent = true;
  /// When not cross-dependent: rainbow[i] is drawn from families[i].
  std::optional<Matching> rainbow;
};

/// Families F_1..F_s (same ground set) are cross-dependent when no
/// pairwise disjoint F_i in F_i exist. Throws RangeError on an empty list
/// or mismatched ground sets.
CrossDependence is_cross_dependent(std::span<const Family> families);

/// s pairwise disjoint k-subsets of [n], uniform over ordered collections,
/// reproducible per seed. Throws RangeError when n < s*k.
std::vector<SubsetWord> sample_disjoint_tuple(std::size_t n, std::size_t k, std::size_t s, std::uint64_t seed);

}  // namespace matchless
