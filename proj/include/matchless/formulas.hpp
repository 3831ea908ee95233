#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "matchless/count.hpp"
#include "matchless/family.hpp"

namespace matchless {

/// Outcome of an exact inequality check. For "lhs > rhs" and "lhs >= rhs"
/// the margin is lhs - rhs; for "lhs <= rhs" it is rhs - lhs. holds agrees
/// with the sign of margin (strictly positive when strict).
struct Verdict {
  bool holds = false;
  Ratio lhs;
  Ratio rhs;
  Ratio margin;
  bool strict = false;
  /// Set for predicates that stand in for asymptotic hypotheses.
  std::optional<std::string> regime_note;
};

inline constexpr const char* kUnspecifiedS0 = "modulo unspecified s₀";
inline constexpr const char* kAsymptoticHypothesis = "asymptotic hypothesis";

/// |A_1^{(k)}(n,s)| = C(n,k) - C(n-s+1,k); needs n >= s-1, s >= 1.
Count size_A1(std::size_t n, std::size_t k, std::size_t s);
/// |A_i^{(k)}(n,s)| summed over the size of the intersection with [si-1].
Count size_A(std::size_t n, std::size_t k, std::size_t s, std::size_t i);
/// |P(m,s,l)|.
Count size_P(std::size_t m, std::size_t s, std::size_t l);
/// |P(m,s,l)^{(<=K)}|.
Count size_P_upto(std::size_t m, std::size_t s, std::size_t l, std::size_t max_size);
/// |A_1^{(k)}(n,s)| - C(n-k-s+1, k-1) + 1, the size of H^{(k)}(n,s).
Count size_H(std::size_t n, std::size_t k, std::size_t s);

/// e(n, s) for n ≡ -1 or 0 (mod s):
///   n = sq - 1:  sum_{t >= q} C(n, t)
///   n = sq:      C(n-1, q) + sum_{t >= q+1} C(n, t)
Count kleitman_value(std::size_t n, std::size_t s);

/// (s-1) C(n-1, k-1); needs n >= k*s.
Count frankl_upper(std::size_t n, std::size_t k, std::size_t s);

/// (1 + t/k) C(n-1, k-1) where n = k*s + t for some s >= 1.
Ratio deficiency_lower(std::size_t n, std::size_t k, std::size_t t);

/// sum_{i<=k} C(n,i) <= (s-1)/(s-2) C(n,k), for n >= s*k - 1 and s >= 3.
Verdict check_low_layers(std::size_t n, std::size_t k, std::size_t s);

/// C(n-m-l+1, m-1) > (l/2) sum_{i=1}^{m-1} C(n-1, i-1) with n = sm+s-l.
/// Throws OutOfRegime unless l >= 2 and s >= 3l/2 + m.
Verdict check_hm_calc(std::size_t m, std::size_t s, std::size_t l);

/// C((m+1)(s-l)-1, m) > (l+t-1) sum_{i=1}^{m-1} C(n-1,i-1) + C(n-l+1,m) - C(n-l-t,m).
Verdict check_condition_1(std::size_t m, std::size_t s, std::size_t l, std::size_t t);
/// (t/(m+1) + 1) C(n-(l+t)m-1, m) > (s-1) sum_{i=1}^{m} C(n-1,i-1).
Verdict check_condition_2(std::size_t m, std::size_t s, std::size_t l, std::size_t t);
/// n >= (5/3)(l+t-1)m - (2/3)(l+t-1); always carries kUnspecifiedS0.
Verdict condition3_regime(std::size_t m, std::size_t l, std::size_t t, std::size_t n);

/// Nominal surrogate n >= 2sk for the asymptotic hypothesis n >= 2sk(1+o(1)).
Verdict hm_stability_regime(std::size_t n, std::size_t k, std::size_t s);

/// Least t >= 0 with (1/m!)(t/(m+1)+1)(2m/5)^m > (m+1)^{m-1}/(m-1)!.
std::size_t smallest_t(std::size_t m);

/// Default search cap for find_valid_t: 10 * smallest_t(m) + 10.
std::size_t default_t_max(std::size_t m);

/// Least t in [0, t_max] for which both conditions hold and the regime
/// predicate for the third holds.
std::optional<std::size_t> find_valid_t(std::size_t m, std::size_t s, std::size_t l,
                                        std::optional<std::size_t> t_max = std::nullopt);

/// (s-1) C(n, k); needs n >= s*k.
Count cross_dep_bound(std::size_t n, std::size_t k, std::size_t s);

}  // namespace matchless
