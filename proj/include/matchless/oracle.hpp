#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "matchless/count.hpp"
#include "matchless/family.hpp"

namespace matchless {

struct OracleResult {
  Count value;
  Family witness;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

struct OracleLimits {
  /// oracle_e ground-set cap; values above 7 are clamped to 7.
  std::size_t max_n = 7;
  /// oracle_ek cap on C(n, k).
  std::size_t max_layer = 5000;
  std::uint64_t node_limit = 200'000'000;
  std::size_t constraint_limit = 4'000'000;
  /// A size known to be achievable. The search then only looks for
  /// families at least this large; it still proves optimality and returns
  /// its own witness. Throws std::logic_error if nothing that large exists.
  std::optional<Count> warm_start;
};

/// e(n, s): the largest family on [n] without s pairwise disjoint members,
/// as a maximum independent set of the hypergraph whose vertices are the
/// subsets of [n] and whose edges are the s-matchings. With shifted_only
/// the search runs over shifted families only. Throws CapExceeded past the
/// limits and RangeError for s < 2.
OracleResult oracle_e(std::size_t n, std::size_t s, bool shifted_only = false, const OracleLimits& limits = {});

/// Largest family of subsets of [n] of size at most max_size with no s
/// pairwise disjoint members. Since F^{(<=k)} inherits the matching bound
/// from F, this is the maximum of |F^{(<=k)}| over all F with nu(F) < s.
OracleResult oracle_e_upto(std::size_t n, std::size_t s, std::size_t max_size, bool shifted_only = false,
                           const OracleLimits& limits = {});

/// e_k(n, s) for k-uniform families. With shifted_only (the default) the
/// search runs over shifted families, which can be reduced to down-sets of
/// ([sk] choose k) avoiding perfect matchings; otherwise every k-subset is
/// a free vertex.
OracleResult oracle_ek(std::size_t n, std::size_t k, std::size_t s, bool shifted_only = true,
                       const OracleLimits& limits = {});

}  // namespace matchless
