#include "matchless/matchings.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <unordered_set>

#include "matchless/errors.hpp"

namespace matchless {

namespace {

// Ground sets up to this size get an exact memoized bound over element masks.
constexpr std::size_t kDpMaxGround = 22;

// Nonempty members of a family laid out as rows of 64-bit blocks.
class PackedFamily {
 public:
  explicit PackedFamily(const Family& f) : n_(f.ground_size()) {
    blocks_ = (n_ + 63) / 64;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto& m = f[i];
      if (m.empty()) {
        empty_index_ = i;
        continue;
      }
      origin_.push_back(i);
      sizes_.push_back(m.size());
      for (std::size_t b = 0; b < blocks_; ++b) words_.push_back(m.block(b));
    }
  }

  std::size_t ground() const { return n_; }
  std::size_t blocks() const { return blocks_; }
  std::size_t count() const { return sizes_.size(); }
  const std::uint64_t* row(std::size_t i) const { return words_.data() + i * blocks_; }
  std::size_t set_size(std::size_t i) const { return sizes_[i]; }
  std::size_t origin(std::size_t i) const { return origin_[i]; }
  std::optional<std::size_t> empty_index() const { return empty_index_; }

  bool fits(std::size_t i, const std::uint64_t* free) const {
    const auto* r = row(i);
    for (std::size_t b = 0; b < blocks_; ++b)
      if (r[b] & ~free[b]) return false;
    return true;
  }

 private:
  std::size_t n_;
  std::size_t blocks_;
  std::vector<std::uint64_t> words_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> origin_;
  std::optional<std::size_t> empty_index_;
};

// Exact maximum matching among members inside an element mask, memoized
// over masks. Branches on the lowest free element: unused, or covered by a
// member whose lowest element it is.
class MaskDp {
 public:
  explicit MaskDp(const PackedFamily& pf) : by_low_(pf.ground()), memo_(std::size_t{1} << pf.ground(), -1) {
    for (std::size_t i = 0; i < pf.count(); ++i) {
      std::uint64_t m = pf.row(i)[0];
      by_low_[static_cast<std::size_t>(std::countr_zero(m))].push_back(m);
    }
  }

  int operator()(std::uint64_t free) {
    if (free == 0) return 0;
    auto& slot = memo_[free];
    if (slot >= 0) return slot;
    auto e = static_cast<std::size_t>(std::countr_zero(free));
    const std::uint64_t bit = std::uint64_t{1} << e;
    int best = (*this)(free & ~bit);
    const int cap = std::popcount(free);
    for (auto m : by_low_[e]) {
      if (best >= cap) break;
      if ((m & ~free) == 0) best = std::max(best, 1 + (*this)(free & ~m));
    }
    memo_[free] = static_cast<std::int8_t>(best);
    return best;
  }

 private:
  std::vector<std::vector<std::uint64_t>> by_low_;
  std::vector<std::int8_t> memo_;
};

// Depth-first search over nonempty members in canonical order. The first
// complete matching found is the lexicographically least one.
class MatchingSearch {
 public:
  explicit MatchingSearch(const Family& f) : pf_(f) {
    if (pf_.ground() <= kDpMaxGround && pf_.count() > 0) dp_.emplace(pf_);
  }

  const PackedFamily& packed() const { return pf_; }

  std::vector<std::uint64_t> full_free() const {
    std::vector<std::uint64_t> free(pf_.blocks(), ~std::uint64_t{0});
    if (auto rem = pf_.ground() % 64) free.back() = (std::uint64_t{1} << rem) - 1;
    return free;
  }

  // Upper bound on the matching number among members with index >= pos
  // inside free; returns early once the bound reaches need.
  std::size_t upper_bound(std::size_t pos, const std::uint64_t* free, std::size_t need) {
    if (dp_) return static_cast<std::size_t>((*dp_)(free[0]));
    std::size_t free_count = 0;
    for (std::size_t b = 0; b < pf_.blocks(); ++b) free_count += static_cast<std::size_t>(std::popcount(free[b]));

    // Sizes are nondecreasing in canonical order: take the smallest ones.
    std::size_t size_bound = 0;
    std::size_t used = 0;
    candidates_.clear();
    for (std::size_t i = pos; i < pf_.count(); ++i) {
      if (!pf_.fits(i, free)) continue;
      candidates_.push_back(i);
      if (used + pf_.set_size(i) <= free_count) {
        used += pf_.set_size(i);
        ++size_bound;
      }
    }
    if (size_bound < need) return size_bound;

    // Any transversal bounds the matching number; build one greedily.
    std::vector<std::size_t> degree(pf_.ground());
    std::vector<char> covered(candidates_.size(), 0);
    std::size_t remaining = candidates_.size();
    std::size_t picks = 0;
    while (remaining > 0 && picks < need) {
      std::fill(degree.begin(), degree.end(), 0);
      for (std::size_t c = 0; c < candidates_.size(); ++c) {
        if (covered[c]) continue;
        const auto* r = pf_.row(candidates_[c]);
        for (std::size_t b = 0; b < pf_.blocks(); ++b) {
          for (std::uint64_t w = r[b]; w; w &= w - 1) ++degree[b * 64 + static_cast<std::size_t>(std::countr_zero(w))];
        }
      }
      auto best = static_cast<std::size_t>(std::max_element(degree.begin(), degree.end()) - degree.begin());
      const std::uint64_t bit = std::uint64_t{1} << (best % 64);
      for (std::size_t c = 0; c < candidates_.size(); ++c) {
        if (!covered[c] && (pf_.row(candidates_[c])[best / 64] & bit)) {
          covered[c] = 1;
          --remaining;
        }
      }
      ++picks;
    }
    return remaining == 0 ? std::min(size_bound, picks) : size_bound;
  }

  // Lexicographically least matching of `need` members (index >= pos) with
  // total size at most budget.
  bool find(std::size_t pos, std::vector<std::uint64_t>& free, std::size_t need, std::size_t budget,
            std::vector<std::size_t>& chosen) {
    if (need == 0) return true;
    if (upper_bound(pos, free.data(), need) < need) return false;
    std::size_t free_count = 0;
    for (auto w : free) free_count += static_cast<std::size_t>(std::popcount(w));
    for (std::size_t i = pos; i < pf_.count(); ++i) {
      if (pf_.count() - i < need) break;
      const std::size_t sz = pf_.set_size(i);
      if (sz * need > free_count || sz * need > budget) break;
      if (!pf_.fits(i, free.data())) continue;
      const auto* r = pf_.row(i);
      for (std::size_t b = 0; b < free.size(); ++b) free[b] &= ~r[b];
      chosen.push_back(i);
      if (find(i + 1, free, need - 1, budget - sz, chosen)) return true;
      chosen.pop_back();
      for (std::size_t b = 0; b < free.size(); ++b) free[b] |= r[b];
    }
    return false;
  }

  // Branch and bound for the maximum; keeps the first maximum found.
  void maximize(std::size_t pos, std::vector<std::uint64_t>& free, std::vector<std::size_t>& chosen,
                std::vector<std::size_t>& best) {
    if (chosen.size() > best.size()) best = chosen;
    const std::size_t need = best.size() - chosen.size() + 1;
    if (upper_bound(pos, free.data(), need) < need) return;
    for (std::size_t i = pos; i < pf_.count(); ++i) {
      if (!pf_.fits(i, free.data())) continue;
      const auto* r = pf_.row(i);
      for (std::size_t b = 0; b < free.size(); ++b) free[b] &= ~r[b];
      chosen.push_back(i);
      maximize(i + 1, free, chosen, best);
      chosen.pop_back();
      for (std::size_t b = 0; b < free.size(); ++b) free[b] |= r[b];
      if (best.size() - chosen.size() + 1 > pf_.count() - i) break;
    }
  }

  std::optional<std::size_t> exact_nonempty() {
    if (!dp_) return std::nullopt;
    return static_cast<std::size_t>((*dp_)(full_free()[0]));
  }

 private:
  PackedFamily pf_;
  std::optional<MaskDp> dp_;
  std::vector<std::size_t> candidates_;
};

Matching assemble(const Family& f, const MatchingSearch& search, bool with_empty,
                  const std::vector<std::size_t>& chosen) {
  Matching out;
  if (with_empty) out.push_back(f[*search.packed().empty_index()]);
  for (auto i : chosen) out.push_back(f[search.packed().origin(i)]);
  return out;
}

std::optional<Matching> bounded_search(const Family& f, std::size_t k, std::size_t budget) {
  if (k == 0) return Matching{};
  MatchingSearch search(f);
  const bool with_empty = search.packed().empty_index().has_value();
  const std::size_t need = k - (with_empty ? 1 : 0);
  std::vector<std::size_t> chosen;
  auto free = search.full_free();
  if (!search.find(0, free, need, budget, chosen)) return std::nullopt;
  return assemble(f, search, with_empty, chosen);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw exactly uniform and platform-stable.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

bool is_matching(std::span<const SubsetWord> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].is_disjoint(sets[j]) || sets[i] == sets[j]) return false;
  return true;
}

NuResult nu(const Family& f) {
  MatchingSearch search(f);
  const bool with_empty = search.packed().empty_index().has_value();
  std::vector<std::size_t> chosen;
  auto free = search.full_free();
  if (auto exact = search.exact_nonempty()) {
    search.find(0, free, *exact, f.ground_size(), chosen);
  } else {
    std::vector<std::size_t> current;
    search.maximize(0, free, current, chosen);
  }
  NuResult out;
  out.witness = assemble(f, search, with_empty, chosen);
  out.value = out.witness.size();
  return out;
}

std::optional<Matching> find_matching(const Family& f, std::size_t s) {
  if (s > f.size()) return std::nullopt;
  return bounded_search(f, s, f.ground_size());
}

bool has_matching(const Family& f, std::size_t s) { return find_matching(f, s).has_value(); }

std::optional<Matching> find_bounded_matching(const Family& f, std::size_t k, std::size_t budget) {
  if (k > f.size()) return std::nullopt;
  return bounded_search(f, k, budget);
}

CrossDependence is_cross_dependent(std::span<const Family> families) {
  if (families.empty()) throw RangeError("cross-dependence needs at least one family");
  const std::size_t n = families[0].ground_size();
  for (const auto& f : families)
    if (f.ground_size() != n) throw RangeError("families live on different ground sets");

  const std::size_t s = families.size();
  const bool memo_ok = n <= 64;
  std::unordered_set<std::uint64_t> failed;  // (index, empty flag, mask) when it fits
  std::vector<std::unordered_set<std::uint64_t>> failed_by_index(memo_ok ? s * 2 : 0);
  Matching chosen;
  SubsetWord free = SubsetWord::full(n);

  auto dfs = [&](auto&& self, std::size_t i, bool empty_used) -> bool {
    if (i == s) return true;
    auto& memo = memo_ok ? failed_by_index[i * 2 + (empty_used ? 1 : 0)] : failed;
    if (memo_ok && memo.count(free.mask())) return false;
    for (const auto& m : families[i]) {
      const bool is_empty = m.empty();
      if (is_empty && empty_used) continue;
      if (!m.is_subset_of(free)) continue;
      SubsetWord saved = free;
      free = free - m;
      chosen.push_back(m);
      if (self(self, i + 1, empty_used || is_empty)) return true;
      chosen.pop_back();
      free = saved;
    }
    if (memo_ok) memo.insert(free.mask());
    return false;
  };

  CrossDependence out;
  if (dfs(dfs, 0, false)) {
    out.cross_dependent = false;
    out.rainbow = chosen;
  }
  return out;
}

std::vector<SubsetWord> sample_disjoint_tuple(std::size_t n, std::size_t k, std::size_t s, std::uint64_t seed) {
  if (n < s * k) throw RangeError("need n >= s*k for " + std::to_string(s) + " disjoint " + std::to_string(k) + "-sets");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i + 1;
  // Only the first s*k positions of a Fisher-Yates shuffle are needed.
  for (std::size_t i = 0; i < s * k; ++i) {
    auto j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
    std::swap(perm[i], perm[j]);
  }
  std::vector<SubsetWord> out;
  for (std::size_t b = 0; b < s; ++b)
    out.push_back(SubsetWord::from_elements(n, std::span<const std::size_t>(perm.data() + b * k, k)));
  return out;
}

}  // namespace matchless
