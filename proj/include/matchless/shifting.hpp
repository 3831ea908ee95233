#pragma once

#include <cstddef>

#include "matchless/family.hpp"

namespace matchless {

/// An (i, j)-shift with 1 <= i < j <= n.
class ShiftPair {
 public:
  ShiftPair(std::size_t i, std::size_t j, std::size_t n);
  std::size_t from() const noexcept { return j_; }
  std::size_t to() const noexcept { return i_; }
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

/// A can be shifted to B: with both sorted, a_t >= b_t for every t.
/// Throws RangeError when |A| != |B|.
bool dominates(const SubsetWord& a, const SubsetWord& b);

/// Classical S_ij compression: A with j in A and i not in A becomes
/// A - j + i unless that set is already a member.
Family shift_ij(const Family& f, const ShiftPair& p);

/// Round-robin passes over all pairs (i ascending, then j ascending) until
/// a full pass changes nothing.
Family shift_closure(const Family& f);

/// Closed under domination within each layer.
bool is_shifted(const Family& f);

}  // namespace matchless
