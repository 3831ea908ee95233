#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "matchless/count.hpp"
#include "matchless/family.hpp"

namespace matchless {

/// All k-sets of [n] containing c.
Family star(std::size_t n, std::size_t k, std::size_t c);

/// k-sets F of [n] with |F ∩ [s*i - 1]| >= i. Needs 1 <= i <= k <= n and
/// s*i - 1 <= n.
Family frankl_A(std::size_t n, std::size_t k, std::size_t s, std::size_t i);

/// {P ⊆ [n] : |P| + |P ∩ [l-1]| >= m+1} on n = s*m + s - l, 1 <= l <= s.
Family family_P(std::size_t m, std::size_t s, std::size_t l);

/// s-2 full stars centred in [s-2], the interval [s, s+k-1], and the
/// k-sets of [s-1, n] containing s-1 that meet [s, s+k-1].
Family hilton_milner_H(std::size_t n, std::size_t k, std::size_t s);

/// All subsets of [n] with at least t elements, 0 <= t <= n+1.
Family threshold_family(std::size_t n, std::size_t t);

/// {F ⊆ [n+1] : F ∩ [n] ∈ f}.
Family doubling(const Family& f);

enum class ConstructionKind { star, frankl_A, family_P, hilton_milner_H, threshold, doubling };

/// Textual construction request, e.g. "P m=1 s=4 l=2", "A n=6 k=2 s=3 i=1",
/// "H n=6 k=2 s=3", "star n=4 k=2 c=1", "thr n=5 t=2", "double thr n=3 t=2".
struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::star;
  std::map<std::string, std::size_t> params;
  std::shared_ptr<const ConstructionSpec> inner;  // doubling only

  std::size_t at(const std::string& name) const { return params.at(name); }
};

/// Throws RangeError on unknown kinds, missing or unknown parameters.
ConstructionSpec parse_construction_spec(std::string_view text);
std::string to_string(const ConstructionSpec& spec);

Family build(const ConstructionSpec& spec);
/// Closed-form size of the construction, without building it.
Count closed_form_size(const ConstructionSpec& spec);

}  // namespace matchless
