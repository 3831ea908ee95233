#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "matchless/formulas.hpp"

namespace matchless::detail {

using ParamMap = std::map<std::string, std::size_t>;

struct CheckKind {
  std::string name;
  std::vector<std::string> params;
};

inline const std::vector<CheckKind>& check_kinds() {
  static const std::vector<CheckKind> kinds = {
      {"lemma33", {"n", "k", "s"}},     {"lemma34", {"m", "s", "l"}},      {"cond1", {"m", "s", "l", "t"}},
      {"cond2", {"m", "s", "l", "t"}}, {"cond3", {"m", "l", "t", "n"}},
  };
  return kinds;
}

inline Verdict evaluate_check(const std::string& name, const ParamMap& p) {
  if (name == "lemma33") return check_low_layers(p.at("n"), p.at("k"), p.at("s"));
  if (name == "lemma34") return check_hm_calc(p.at("m"), p.at("s"), p.at("l"));
  if (name == "cond1") return check_condition_1(p.at("m"), p.at("s"), p.at("l"), p.at("t"));
  if (name == "cond2") return check_condition_2(p.at("m"), p.at("s"), p.at("l"), p.at("t"));
  return condition3_regime(p.at("m"), p.at("l"), p.at("t"), p.at("n"));
}

}  // namespace matchless::detail
