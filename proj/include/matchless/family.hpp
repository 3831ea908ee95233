#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchless/count.hpp"
#include "matchless/subset.hpp"

namespace matchless {

/// A family of subsets of [n]: deduplicated and kept in canonical order
/// (size first, then numeric bit value). Immutable once built.
class Family {
 public:
  using const_iterator = std::vector<SubsetWord>::const_iterator;

  /// The empty family on [n].
  explicit Family(std::size_t n);
  /// Sorts and deduplicates. Throws RangeError if a member lives on a
  /// different ground set.
  Family(std::size_t n, std::vector<SubsetWord> members);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<SubsetWord>& members() const noexcept { return members_; }
  const SubsetWord& operator[](std::size_t i) const { return members_[i]; }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

  bool contains(const SubsetWord& s) const;
  /// Position in canonical order.
  std::optional<std::size_t> index_of(const SubsetWord& s) const;

  friend bool operator==(const Family& a, const Family& b) = default;

 private:
  std::size_t n_;
  std::vector<SubsetWord> members_;
};

/// F^{(k)}: members of size exactly k. Throws RangeError unless 0 <= k <= n.
Family layer(const Family& f, std::size_t k);
/// F^{(<=k)}.
Family layer_at_most(const Family& f, std::size_t k);
/// F^{(>=k)}.
Family layer_at_least(const Family& f, std::size_t k);

/// y_F(k) = C(n, k) - |F^{(k)}|, the number of k-sets missing from F.
Count deficiency(const Family& f, std::size_t k);

/// F restricted to 2^X: members contained in X, labels unchanged.
Family restrict_to(const Family& f, const SubsetWord& x);

/// Calls fn on every k-subset of [n] in canonical order.
void for_each_k_subset(std::size_t n, std::size_t k, const std::function<void(const SubsetWord&)>& fn);
/// All members of 2^[n] satisfying pred. Throws CapExceeded for n > 26.
Family subsets_where(std::size_t n, const std::function<bool(const SubsetWord&)>& pred);
/// k-subsets of [n] satisfying pred.
Family k_subsets_where(std::size_t n, std::size_t k, const std::function<bool(const SubsetWord&)>& pred);
/// ([n] choose k).
Family full_layer(std::size_t n, std::size_t k);
/// 2^[n].
Family power_set(std::size_t n);

/// Parses FAMILY v1 text. Errors carry the offending line number.
Family parse_family(std::string_view text);
/// Canonical FAMILY v1 text.
std::string serialize_family(const Family& f);

}  // namespace matchless

namespace matchless {

/// (n, s, m, l) tied by n = s*m + s - l with 1 <= l <= s and m, s >= 1.
struct Params {
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t m = 0;
  std::size_t l = 0;

  /// Throws RangeError outside the documented range.
  static Params from_msl(std::size_t m, std::size_t s, std::size_t l);
};

}  // namespace matchless
