#include "matchless/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <vector>

#include "matchless/errors.hpp"
#include "matchless/shifting.hpp"

namespace matchless {

namespace {

// Fixed-width bitsets over the search vertices, stored as spans into
// caller-owned buffers.
class BitRows {
 public:
  BitRows(std::size_t rows, std::size_t bits) : words_((bits + 63) / 64), data_(rows * words_, 0) {}
  std::size_t words() const { return words_; }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

inline bool test_bit(const std::uint64_t* b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
inline void set_bit(std::uint64_t* b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

// Minimum-weight up-set meeting every constraint, over a poset given by
// up- and down-closures. The complement is the heaviest down-set that
// contains no constraint entirely.
//
// Branching picks an unhit constraint with the fewest removable members
// v_1..v_r and explores "remove up(v_j), keep down(v_1..v_{j-1})" for each
// j, so every solution is reached exactly once. The lower bound packs
// unhit constraints whose candidate removal regions are pairwise disjoint.
class UpsetCover {
 public:
  UpsetCover(std::vector<std::uint64_t> weights, BitRows up, BitRows down,
             std::vector<std::vector<std::uint32_t>> constraints, std::uint64_t node_limit)
      : weights_(std::move(weights)),
        up_(std::move(up)),
        down_(std::move(down)),
        constraints_(std::move(constraints)),
        node_limit_(node_limit),
        words_(up_.words()) {
    unit_weights_ = std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 1; });
    cost_.assign(weights_.size(), 0);
    stamp_.assign(weights_.size(), 0);
  }

  // Minimum removal weight, searching only below `bound` (exclusive).
  // Returns false when no cover cheaper than bound exists.
  bool solve(std::uint64_t bound) {
    best_ = bound;
    found_ = false;
    std::vector<std::uint64_t> removed(words_, 0), kept(words_, 0);
    std::vector<std::uint32_t> all(constraints_.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    dfs(removed, kept, 0, all);
    return found_;
  }

  std::uint64_t best_cost() const { return best_; }
  const std::vector<std::uint64_t>& best_removed() const { return best_removed_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Option {
    std::uint32_t vertex;
    std::uint64_t cost;
  };

  std::uint64_t region_cost(const std::uint64_t* removed, std::uint32_t v) {
    if (stamp_[v] == node_stamp_) return cost_[v];
    const std::uint64_t* u = up_.row(v);
    std::uint64_t total = 0;
    if (unit_weights_) {
      for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::uint64_t>(std::popcount(u[w] & ~removed[w]));
    } else {
      for (std::size_t w = 0; w < words_; ++w)
        for (std::uint64_t bits = u[w] & ~removed[w]; bits; bits &= bits - 1)
          total += weights_[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
    }
    stamp_[v] = node_stamp_;
    cost_[v] = total;
    return total;
  }

  void dfs(const std::vector<std::uint64_t>& removed, const std::vector<std::uint64_t>& kept, std::uint64_t cost,
           const std::vector<std::uint32_t>& parent_unhit) {
    if (++nodes_ > node_limit_) throw CapExceeded("oracle search exceeded " + std::to_string(node_limit_) + " nodes");
    ++node_stamp_;

    std::vector<std::uint32_t> unhit;
    unhit.reserve(parent_unhit.size());
    for (auto c : parent_unhit) {
      bool hit = false;
      for (auto v : constraints_[c])
        if (test_bit(removed.data(), v)) {
          hit = true;
          break;
        }
      if (!hit) unhit.push_back(c);
    }
    if (unhit.empty()) {
      if (cost < best_) {
        best_ = cost;
        best_removed_ = removed;
        found_ = true;
      }
      return;
    }

    // Choose the branching constraint and compute the packing bound.
    std::size_t pick = 0;
    std::size_t pick_options = std::numeric_limits<std::size_t>::max();
    std::uint64_t pick_min_cost = 0;
    std::uint64_t lower = 0;
    std::vector<std::uint64_t> claimed(words_, 0);
    for (std::size_t idx = 0; idx < unhit.size(); ++idx) {
      const auto& members = constraints_[unhit[idx]];
      std::size_t options = 0;
      std::uint64_t min_cost = std::numeric_limits<std::uint64_t>::max();
      bool disjoint = true;
      for (auto v : members) {
        if (test_bit(kept.data(), v)) continue;
        ++options;
        min_cost = std::min(min_cost, region_cost(removed.data(), v));
        const std::uint64_t* u = up_.row(v);
        for (std::size_t w = 0; w < words_ && disjoint; ++w)
          if (u[w] & ~removed[w] & claimed[w]) disjoint = false;
      }
      if (options == 0) return;  // a kept down-set already contains this constraint
      if (options < pick_options || (options == pick_options && min_cost > pick_min_cost)) {
        pick = idx;
        pick_options = options;
        pick_min_cost = min_cost;
      }
      if (disjoint) {
        lower += min_cost;
        for (auto v : members) {
          if (test_bit(kept.data(), v)) continue;
          const std::uint64_t* u = up_.row(v);
          for (std::size_t w = 0; w < words_; ++w) claimed[w] |= u[w] & ~removed[w];
        }
      }
    }
    if (cost + std::max(lower, pick_min_cost) >= best_) return;

    std::vector<Option> options;
    for (auto v : constraints_[unhit[pick]])
      if (!test_bit(kept.data(), v)) options.push_back({v, region_cost(removed.data(), v)});
    std::stable_sort(options.begin(), options.end(), [](const Option& a, const Option& b) {
      return a.cost != b.cost ? a.cost < b.cost : a.vertex < b.vertex;
    });

    std::vector<std::uint64_t> next_removed(words_), next_kept = kept;
    for (std::size_t j = 0; j < options.size(); ++j) {
      const auto& opt = options[j];
      if (j > 0) {
        // Earlier options are kept from here on.
        const std::uint64_t* d = down_.row(options[j - 1].vertex);
        for (std::size_t w = 0; w < words_; ++w) next_kept[w] |= d[w];
        bool clash = false;
        for (std::size_t w = 0; w < words_; ++w)
          if (next_kept[w] & removed[w]) clash = true;
        if (clash) return;
      }
      if (cost + opt.cost >= best_) continue;
      const std::uint64_t* u = up_.row(opt.vertex);
      bool clash = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next_removed[w] = removed[w] | u[w];
        if (u[w] & next_kept[w]) clash = true;
      }
      if (clash) continue;
      dfs(next_removed, next_kept, cost + opt.cost, unhit);
    }
  }

  std::vector<std::uint64_t> weights_;
  BitRows up_;
  BitRows down_;
  std::vector<std::vector<std::uint32_t>> constraints_;
  std::uint64_t node_limit_;
  std::size_t words_;
  bool unit_weights_ = true;

  std::vector<std::uint64_t> cost_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t node_stamp_ = 0;

  std::uint64_t best_ = 0;
  bool found_ = false;
  std::vector<std::uint64_t> best_removed_;
  std::uint64_t nodes_ = 0;
};

// Vertices as subsets; poset is either trivial or dominance within layers.
struct Poset {
  BitRows up;
  BitRows down;
};

Poset build_poset(const std::vector<SubsetWord>& vertices, bool dominance) {
  const std::size_t v = vertices.size();
  Poset p{BitRows(v, v), BitRows(v, v)};
  for (std::size_t a = 0; a < v; ++a) {
    set_bit(p.up.row(a), a);
    set_bit(p.down.row(a), a);
    if (!dominance) continue;
    for (std::size_t b = 0; b < v; ++b) {
      if (a == b || vertices[a].size() != vertices[b].size()) continue;
      // a can be shifted to b: b sits below a.
      if (dominates(vertices[a], vertices[b])) {
        set_bit(p.down.row(a), b);
        set_bit(p.up.row(b), a);
      }
    }
  }
  return p;
}

// All s-element matchings among the vertices (distinct, pairwise disjoint),
// as index lists.
std::vector<std::vector<std::uint32_t>> enumerate_matchings(const std::vector<SubsetWord>& vertices, std::size_t s,
                                                            std::size_t limit) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  auto dfs = [&](auto&& self, std::size_t start, const SubsetWord& used) -> void {
    if (current.size() == s) {
      if (out.size() >= limit) throw CapExceeded("more than " + std::to_string(limit) + " forbidden matchings");
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < vertices.size(); ++i) {
      if (!vertices[i].is_disjoint(used)) continue;
      current.push_back(static_cast<std::uint32_t>(i));
      self(self, i + 1, used | vertices[i]);
      current.pop_back();
    }
  };
  if (!vertices.empty()) dfs(dfs, 0, SubsetWord(vertices[0].ground_size()));
  return out;
}

// Perfect matchings of [ground] into members of `vertices` (all k-sets of
// [ground]), each listed once: every block takes the smallest free element.
std::vector<std::vector<std::uint32_t>> enumerate_perfect_matchings(const std::vector<SubsetWord>& vertices,
                                                                    std::size_t ground, std::size_t limit) {
  std::vector<std::vector<std::uint32_t>> by_min(ground + 1);
  for (std::uint32_t i = 0; i < vertices.size(); ++i) by_min[vertices[i].min_element()].push_back(i);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  auto dfs = [&](auto&& self, const SubsetWord& used) -> void {
    const SubsetWord free = SubsetWord::full(ground) - used;
    if (free.empty()) {
      if (out.size() >= limit) throw CapExceeded("more than " + std::to_string(limit) + " forbidden matchings");
      out.push_back(current);
      return;
    }
    for (auto i : by_min[free.min_element()]) {
      if (!vertices[i].is_disjoint(used)) continue;
      current.push_back(i);
      self(self, used | vertices[i]);
      current.pop_back();
    }
  };
  dfs(dfs, SubsetWord(ground));
  return out;
}

// Larger constraints first: the packing bound picks them up early.
void order_constraints(std::vector<std::vector<std::uint32_t>>& constraints,
                       const std::vector<SubsetWord>& vertices) {
  auto covered = [&](const std::vector<std::uint32_t>& c) {
    std::size_t total = 0;
    for (auto v : c) total += vertices[v].size();
    return total;
  };
  std::stable_sort(constraints.begin(), constraints.end(),
                   [&](const auto& a, const auto& b) { return covered(a) > covered(b); });
}

struct SearchOutcome {
  std::vector<char> kept;
  std::uint64_t kept_weight = 0;
  std::uint64_t nodes = 0;
};

SearchOutcome run_search(const std::vector<std::uint64_t>& weights, Poset poset,
                         std::vector<std::vector<std::uint32_t>> constraints, const OracleLimits& limits) {
  std::uint64_t total = 0;
  for (auto w : weights) total += w;
  std::uint64_t bound = total + 1;
  if (limits.warm_start) {
    if (*limits.warm_start > total) throw std::logic_error("warm start exceeds the number of candidate sets");
    bound = total - static_cast<std::uint64_t>(*limits.warm_start) + 1;
  }
  UpsetCover cover(weights, std::move(poset.up), std::move(poset.down), std::move(constraints), limits.node_limit);
  if (!cover.solve(bound)) throw std::logic_error("warm start value is not achievable");
  SearchOutcome out;
  out.kept.assign(weights.size(), 0);
  for (std::size_t v = 0; v < weights.size(); ++v)
    if (!test_bit(cover.best_removed().data(), v)) {
      out.kept[v] = 1;
      out.kept_weight += weights[v];
    }
  out.nodes = cover.nodes();
  return out;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

OracleResult oracle_e(std::size_t n, std::size_t s, bool shifted_only, const OracleLimits& limits) {
  return oracle_e_upto(n, s, n, shifted_only, limits);
}

OracleResult oracle_e_upto(std::size_t n, std::size_t s, std::size_t max_size, bool shifted_only,
                           const OracleLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t cap = std::min<std::size_t>(limits.max_n, 7);
  if (s < 2) throw RangeError("oracle_e needs s >= 2");
  if (n < 1) throw RangeError("oracle_e needs n >= 1");
  if (n > cap) throw CapExceeded("oracle_e is capped at n <= " + std::to_string(cap));

  std::vector<SubsetWord> vertices(layer_at_most(power_set(n), std::min(max_size, n)).members());
  std::vector<std::uint64_t> weights(vertices.size(), 1);
  auto constraints = enumerate_matchings(vertices, s, limits.constraint_limit);
  order_constraints(constraints, vertices);
  auto outcome = run_search(weights, build_poset(vertices, shifted_only), std::move(constraints), limits);

  std::vector<SubsetWord> kept;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (outcome.kept[v]) kept.push_back(vertices[v]);
  OracleResult r{Count(outcome.kept_weight), Family(n, std::move(kept)), outcome.nodes, 0.0};
  r.elapsed_ms = elapsed_since(start);
  return r;
}

OracleResult oracle_ek(std::size_t n, std::size_t k, std::size_t s, bool shifted_only, const OracleLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  if (s < 2) throw RangeError("oracle_ek needs s >= 2");
  if (k < 1 || k > n) throw RangeError("oracle_ek needs 1 <= k <= n");
  const Count layer_size = binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  if (layer_size > limits.max_layer)
    throw CapExceeded("oracle_ek is capped at C(n,k) <= " + std::to_string(limits.max_layer));

  if (n < s * k) {
    // No s pairwise disjoint k-sets fit into [n].
    OracleResult r{layer_size, full_layer(n, k), 0, 0.0};
    r.elapsed_ms = elapsed_since(start);
    return r;
  }

  OracleResult r{0, Family(n), 0, 0.0};
  if (!shifted_only) {
    std::vector<SubsetWord> vertices(full_layer(n, k).members());
    std::vector<std::uint64_t> weights(vertices.size(), 1);
    auto constraints = enumerate_matchings(vertices, s, limits.constraint_limit);
    order_constraints(constraints, vertices);
    auto outcome = run_search(weights, build_poset(vertices, false), std::move(constraints), limits);
    std::vector<SubsetWord> kept;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (outcome.kept[v]) kept.push_back(vertices[v]);
    r = OracleResult{Count(outcome.kept_weight), Family(n, std::move(kept)), outcome.nodes, 0.0};
  } else {
    // A shifted family G has an s-matching iff G ∩ ([sk] choose k) has a
    // perfect matching of [sk]. Each k-set A of [n] projects to
    // p(A)_t = min(a_t, sk - k + t); the largest shifted family with a given
    // trace D on [sk] is the preimage of D, so the trace carries weight
    // |p^{-1}(B)| per vertex B.
    const std::size_t inner = s * k;
    std::vector<SubsetWord> vertices(full_layer(inner, k).members());
    std::vector<std::uint64_t> weights(vertices.size(), 0);
    std::vector<SubsetWord> layer(full_layer(n, k).members());
    std::vector<std::uint32_t> image(layer.size());
    for (std::size_t a = 0; a < layer.size(); ++a) {
      auto elems = layer[a].elements();
      for (std::size_t t = 0; t < k; ++t) elems[t] = std::min(elems[t], inner - k + t + 1);
      SubsetWord projected = SubsetWord::from_elements(inner, elems);
      auto it = std::lower_bound(vertices.begin(), vertices.end(), projected);
      image[a] = static_cast<std::uint32_t>(it - vertices.begin());
      ++weights[image[a]];
    }
    auto constraints = enumerate_perfect_matchings(vertices, inner, limits.constraint_limit);
    auto outcome = run_search(weights, build_poset(vertices, true), std::move(constraints), limits);
    std::vector<SubsetWord> kept;
    for (std::size_t a = 0; a < layer.size(); ++a)
      if (outcome.kept[image[a]]) kept.push_back(layer[a]);
    r = OracleResult{Count(outcome.kept_weight), Family(n, std::move(kept)), outcome.nodes, 0.0};
  }
  r.elapsed_ms = elapsed_since(start);
  return r;
}

}  // namespace matchless
