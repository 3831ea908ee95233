#include "matchless/shifting.hpp"

#include "matchless/errors.hpp"

namespace matchless {

ShiftPair::ShiftPair(std::size_t i, std::size_t j, std::size_t n) : i_(i), j_(j) {
  if (!(1 <= i && i < j && j <= n))
    throw RangeError("shift pair (" + std::to_string(i) + "," + std::to_string(j) + ") needs 1 <= i < j <= " +
                     std::to_string(n));
}

bool dominates(const SubsetWord& a, const SubsetWord& b) {
  if (a.size() != b.size()) throw RangeError("dominance compares sets of equal size");
  auto ea = a.elements();
  auto eb = b.elements();
  for (std::size_t t = 0; t < ea.size(); ++t)
    if (ea[t] < eb[t]) return false;
  return true;
}

Family shift_ij(const Family& f, const ShiftPair& p) {
  if (p.j() > f.ground_size()) throw RangeError("shift pair outside the ground set");
  std::vector<SubsetWord> out;
  out.reserve(f.size());
  for (const auto& a : f) {
    if (a.contains(p.j()) && !a.contains(p.i())) {
      SubsetWord b = a;
      b.erase(p.j());
      b.insert(p.i());
      if (!f.contains(b)) {
        out.push_back(b);
        continue;
      }
    }
    out.push_back(a);
  }
  return Family(f.ground_size(), std::move(out));
}

Family shift_closure(const Family& f) {
  Family current = f;
  const std::size_t n = f.ground_size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        Family next = shift_ij(current, ShiftPair(i, j, n));
        if (!(next == current)) {
          changed = true;
          current = std::move(next);
        }
      }
    }
  }
  return current;
}

bool is_shifted(const Family& f) {
  // Domination within a layer is generated by lowering one element by one.
  for (const auto& a : f) {
    for (auto e : a.elements()) {
      if (e == 1 || a.contains(e - 1)) continue;
      SubsetWord b = a;
      b.erase(e);
      b.insert(e - 1);
      if (!f.contains(b)) return false;
    }
  }
  return true;
}

}  // namespace matchless
