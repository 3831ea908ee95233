#include "matchless/formulas.hpp"

#include "matchless/errors.hpp"

namespace matchless {

namespace {

using i64 = std::int64_t;

i64 sz(std::size_t v) { return static_cast<i64>(v); }

void require(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

Verdict greater(Ratio lhs, Ratio rhs) {
  Verdict v;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.margin = v.lhs - v.rhs;
  v.strict = true;
  v.holds = v.margin > 0;
  return v;
}

Verdict greater_equal(Ratio lhs, Ratio rhs) {
  Verdict v = greater(std::move(lhs), std::move(rhs));
  v.strict = false;
  v.holds = v.margin >= 0;
  return v;
}

Verdict less_equal(Ratio lhs, Ratio rhs) {
  Verdict v;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.margin = v.rhs - v.lhs;
  v.strict = false;
  v.holds = v.margin >= 0;
  return v;
}

// sum_{i=1}^{top} C(n-1, i-1)
Count lower_layer_sum(i64 n, i64 top) {
  Count total = 0;
  for (i64 i = 1; i <= top; ++i) total += binom(n - 1, i - 1);
  return total;
}

// Integer pieces of conditions (10) and (11) that do not depend on t.
struct ConditionTerms {
  Params p;
  Count first_lhs;     // C((m+1)(s-l)-1, m)
  Count sum_below_m;   // sum_{i=1}^{m-1} C(n-1,i-1)
  Count sum_upto_m;    // sum_{i=1}^{m} C(n-1,i-1)
  Count top_layer;     // C(n-l+1, m)

  explicit ConditionTerms(const Params& params) : p(params) {
    const i64 n = sz(p.n), m = sz(p.m), s = sz(p.s), l = sz(p.l);
    first_lhs = binom((m + 1) * (s - l) - 1, m);
    sum_below_m = lower_layer_sum(n, m - 1);
    sum_upto_m = lower_layer_sum(n, m);
    top_layer = binom(n - l + 1, m);
  }

  Count first_rhs(i64 t) const {
    const i64 n = sz(p.n), m = sz(p.m), l = sz(p.l);
    return (l + t - 1) * sum_below_m + top_layer - binom(n - l - t, m);
  }
  Count second_binom(i64 t) const {
    const i64 n = sz(p.n), m = sz(p.m), l = sz(p.l);
    return binom(n - (l + t) * m - 1, m);
  }
  bool first_holds(i64 t) const { return first_lhs > first_rhs(t); }
  // (t/(m+1) + 1) X > Y  <=>  (t + m + 1) X > (m+1) Y
  bool second_holds(i64 t) const {
    const i64 m = sz(p.m);
    return (t + m + 1) * second_binom(t) > (m + 1) * (sz(p.s) - 1) * sum_upto_m;
  }
};

// 3n >= 5(l+t-1)m - 2(l+t-1)
bool regime3_holds(i64 m, i64 l, i64 t, i64 n) { return 3 * n >= (5 * m - 2) * (l + t - 1); }

}  // namespace

Count size_A1(std::size_t n, std::size_t k, std::size_t s) {
  require(s >= 1 && n + 1 >= s, "size_A1 needs s >= 1 and n >= s-1");
  return binom(sz(n), sz(k)) - binom(sz(n) - sz(s) + 1, sz(k));
}

Count size_A(std::size_t n, std::size_t k, std::size_t s, std::size_t i) {
  require(n >= 1 && 1 <= i && i <= k && k <= n && s >= 1 && s * i - 1 <= n,
          "size_A needs 1 <= i <= k <= n, s >= 1 and s*i - 1 <= n");
  const i64 prefix = sz(s * i - 1);
  Count total = 0;
  for (i64 j = sz(i); j <= sz(k); ++j) total += binom(prefix, j) * binom(sz(n) - prefix, sz(k) - j);
  return total;
}

Count size_P_upto(std::size_t m, std::size_t s, std::size_t l, std::size_t max_size) {
  const Params p = Params::from_msl(m, s, l);
  const i64 n = sz(p.n), low = sz(l) - 1;
  Count total = 0;
  for (i64 size = 0; size <= std::min(sz(max_size), n); ++size)
    for (i64 x = 0; x <= low && x <= size; ++x)
      if (size + x >= sz(m) + 1) total += binom(low, x) * binom(n - low, size - x);
  return total;
}

Count size_P(std::size_t m, std::size_t s, std::size_t l) {
  const Params p = Params::from_msl(m, s, l);
  return size_P_upto(m, s, l, p.n);
}

Count size_H(std::size_t n, std::size_t k, std::size_t s) {
  require(s >= 2 && k >= 1 && s + k - 1 <= n, "size_H needs s >= 2, k >= 1 and s + k - 1 <= n");
  return size_A1(n, k, s) - binom(sz(n) - sz(k) - sz(s) + 1, sz(k) - 1) + 1;
}

Count kleitman_value(std::size_t n, std::size_t s) {
  require(s >= 2 && n >= 1, "kleitman_value needs s >= 2 and n >= 1");
  const std::size_t r = n % s;
  if (r != s - 1 && r != 0)
    throw RangeError("kleitman_value needs n ≡ -1 or 0 (mod s); got n=" + std::to_string(n) +
                     " s=" + std::to_string(s));
  Count total = 0;
  if (r == s - 1) {
    const i64 q = sz((n + 1) / s);
    for (i64 t = q; t <= sz(n); ++t) total += binom(sz(n), t);
  } else {
    const i64 q = sz(n / s);
    total = binom(sz(n) - 1, q);
    for (i64 t = q + 1; t <= sz(n); ++t) total += binom(sz(n), t);
  }
  return total;
}

Count frankl_upper(std::size_t n, std::size_t k, std::size_t s) {
  require(k >= 1 && s >= 1 && n >= k * s, "frankl_upper needs k, s >= 1 and n >= k*s");
  return (sz(s) - 1) * binom(sz(n) - 1, sz(k) - 1);
}

Ratio deficiency_lower(std::size_t n, std::size_t k, std::size_t t) {
  require(k >= 1 && n >= t + k && (n - t) % k == 0, "deficiency_lower needs n = k*s + t with s >= 1");
  return (Ratio(1) + Ratio(sz(t), sz(k))) * Ratio(binom(sz(n) - 1, sz(k) - 1));
}

Verdict check_low_layers(std::size_t n, std::size_t k, std::size_t s) {
  require(s >= 3 && n + 1 >= s * k, "check_low_layers needs s >= 3 and n >= s*k - 1");
  Count lhs = 0;
  for (i64 i = 0; i <= sz(k); ++i) lhs += binom(sz(n), i);
  return less_equal(Ratio(lhs), Ratio(sz(s) - 1, sz(s) - 2) * Ratio(binom(sz(n), sz(k))));
}

Verdict check_hm_calc(std::size_t m, std::size_t s, std::size_t l) {
  if (l < 2 || 2 * s < 3 * l + 2 * m)
    throw OutOfRegime("check_hm_calc needs l >= 2 and s >= 3l/2 + m (got m=" + std::to_string(m) +
                      " s=" + std::to_string(s) + " l=" + std::to_string(l) + ")");
  const Params p = Params::from_msl(m, s, l);
  const i64 n = sz(p.n);
  Count lhs = binom(n - sz(m) - sz(l) + 1, sz(m) - 1);
  Ratio rhs = Ratio(sz(l), 2) * Ratio(lower_layer_sum(n, sz(m) - 1));
  return greater(Ratio(lhs), rhs);
}

Verdict check_condition_1(std::size_t m, std::size_t s, std::size_t l, std::size_t t) {
  const ConditionTerms terms(Params::from_msl(m, s, l));
  return greater(Ratio(terms.first_lhs), Ratio(terms.first_rhs(sz(t))));
}

Verdict check_condition_2(std::size_t m, std::size_t s, std::size_t l, std::size_t t) {
  const ConditionTerms terms(Params::from_msl(m, s, l));
  Ratio lhs = (Ratio(sz(t), sz(m) + 1) + 1) * Ratio(terms.second_binom(sz(t)));
  Ratio rhs = Ratio((sz(s) - 1) * terms.sum_upto_m);
  return greater(lhs, rhs);
}

Verdict condition3_regime(std::size_t m, std::size_t l, std::size_t t, std::size_t n) {
  const i64 width = sz(l) + sz(t) - 1;
  Ratio rhs = Ratio(5, 3) * Ratio(width * sz(m)) - Ratio(2, 3) * Ratio(width);
  Verdict v = greater_equal(Ratio(sz(n)), rhs);
  v.regime_note = kUnspecifiedS0;
  return v;
}

Verdict hm_stability_regime(std::size_t n, std::size_t k, std::size_t s) {
  Verdict v = greater_equal(Ratio(sz(n)), Ratio(2 * sz(s) * sz(k)));
  v.regime_note = kAsymptoticHypothesis;
  return v;
}

std::size_t smallest_t(std::size_t m) {
  require(m >= 1, "smallest_t needs m >= 1");
  // The condition is linear in t: t > (m+1)(R - 1) with
  // R = (m+1)^{m-1} m! 5^m / ((m-1)! (2m)^m) = (m+1)^{m-1} m 5^m / (2m)^m.
  const i64 mm = sz(m);
  Count num = Count(mm);
  Count den = 1;
  for (i64 i = 0; i < mm - 1; ++i) num *= mm + 1;
  for (i64 i = 0; i < mm; ++i) {
    num *= 5;
    den *= 2 * mm;
  }
  Ratio bound = Ratio(mm + 1) * (Ratio(num, den) - 1);
  if (bound < 0) return 0;
  Count floor = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
  return static_cast<std::size_t>(floor) + 1;
}

std::size_t default_t_max(std::size_t m) { return 10 * smallest_t(m) + 10; }

std::optional<std::size_t> find_valid_t(std::size_t m, std::size_t s, std::size_t l, std::optional<std::size_t> t_max) {
  const Params p = Params::from_msl(m, s, l);
  const std::size_t cap = t_max.value_or(default_t_max(m));
  const ConditionTerms terms(p);
  for (std::size_t t = 0; t <= cap; ++t) {
    // The regime predicate is a linear inequality whose right side grows
    // with t, so the first failure is final.
    if (!regime3_holds(sz(m), sz(l), sz(t), sz(p.n))) return std::nullopt;
    if (terms.first_holds(sz(t)) && terms.second_holds(sz(t))) return t;
  }
  return std::nullopt;
}

Count cross_dep_bound(std::size_t n, std::size_t k, std::size_t s) {
  require(k >= 1 && s >= 1 && n >= s * k, "cross_dep_bound needs k, s >= 1 and n >= s*k");
  return (sz(s) - 1) * binom(sz(n), sz(k));
}

}  // namespace matchless
