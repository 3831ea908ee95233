#include "matchless/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "matchless/errors.hpp"
#include "matchless/formulas.hpp"

namespace matchless {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

std::size_t count_in_prefix(const SubsetWord& s, std::size_t prefix) {
  return (s & SubsetWord::interval(s.ground_size(), 1, prefix)).size();
}

struct KindInfo {
  ConstructionKind kind;
  const char* token;
  std::vector<std::string> names;
};

const std::vector<KindInfo>& kinds() {
  static const std::vector<KindInfo> table = {
      {ConstructionKind::star, "star", {"n", "k", "c"}},
      {ConstructionKind::frankl_A, "A", {"n", "k", "s", "i"}},
      {ConstructionKind::family_P, "P", {"m", "s", "l"}},
      {ConstructionKind::hilton_milner_H, "H", {"n", "k", "s"}},
      {ConstructionKind::threshold, "thr", {"n", "t"}},
  };
  return table;
}

}  // namespace

Family star(std::size_t n, std::size_t k, std::size_t c) {
  require(n >= 1 && 1 <= k && k <= n && 1 <= c && c <= n, "star needs 1 <= k <= n and 1 <= c <= n");
  return k_subsets_where(n, k, [c](const SubsetWord& f) { return f.contains(c); });
}

Family frankl_A(std::size_t n, std::size_t k, std::size_t s, std::size_t i) {
  require(n >= 1 && 1 <= i && i <= k && k <= n && s >= 1 && s * i - 1 <= n,
          "frankl_A needs 1 <= i <= k <= n, s >= 1 and s*i - 1 <= n");
  const std::size_t prefix = s * i - 1;
  return k_subsets_where(n, k, [=](const SubsetWord& f) { return count_in_prefix(f, prefix) >= i; });
}

Family family_P(std::size_t m, std::size_t s, std::size_t l) {
  require(m >= 1 && s >= 1 && 1 <= l && l <= s, "family_P needs m >= 1 and 1 <= l <= s");
  const std::size_t n = s * m + s - l;
  return subsets_where(n, [=](const SubsetWord& p) { return p.size() + count_in_prefix(p, l - 1) >= m + 1; });
}

Family hilton_milner_H(std::size_t n, std::size_t k, std::size_t s) {
  require(s >= 2 && k >= 1 && s + k - 1 <= n, "hilton_milner_H needs s >= 2, k >= 1 and s + k - 1 <= n");
  const SubsetWord low = SubsetWord::interval(n, 1, s - 2);
  const SubsetWord block = SubsetWord::interval(n, s, s + k - 1);
  return k_subsets_where(n, k, [&](const SubsetWord& h) {
    if (!(h & low).empty()) return true;
    if (h == block) return true;
    return h.min_element() == s - 1 && !(h & block).empty();
  });
}

Family threshold_family(std::size_t n, std::size_t t) {
  require(n >= 1 && t <= n + 1, "threshold_family needs 0 <= t <= n+1");
  return subsets_where(n, [t](const SubsetWord& p) { return p.size() >= t; });
}

Family doubling(const Family& f) {
  const std::size_t n = f.ground_size();
  if (n + 1 > SubsetWord::kMaxGround) throw CapExceeded("doubling exceeds the ground-set cap 1024");
  std::vector<SubsetWord> out;
  out.reserve(2 * f.size());
  for (const auto& m : f) {
    SubsetWord lifted = m.rebased(n + 1);
    out.push_back(lifted);
    lifted.insert(n + 1);
    out.push_back(lifted);
  }
  return Family(n + 1, std::move(out));
}

ConstructionSpec parse_construction_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw RangeError("empty construction spec");

  std::size_t pos = 0;
  std::size_t doublings = 0;
  while (pos < tokens.size() && tokens[pos] == "double") {
    ++doublings;
    ++pos;
  }
  if (pos == tokens.size()) throw RangeError("construction spec is missing a family kind");

  const KindInfo* info = nullptr;
  for (const auto& k : kinds())
    if (tokens[pos] == k.token) info = &k;
  if (!info) throw RangeError("unknown construction kind \"" + tokens[pos] + "\"");

  ConstructionSpec spec;
  spec.kind = info->kind;
  for (++pos; pos < tokens.size(); ++pos) {
    const auto& tok = tokens[pos];
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw RangeError("expected name=value, got \"" + tok + "\"");
    std::string name = tok.substr(0, eq);
    std::string value = tok.substr(eq + 1);
    if (std::find(info->names.begin(), info->names.end(), name) == info->names.end())
      throw RangeError("unknown parameter \"" + name + "\" for " + info->token);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size())
      throw RangeError("parameter " + name + " needs a nonnegative integer");
    if (!spec.params.emplace(name, v).second) throw RangeError("parameter " + name + " given twice");
  }
  for (const auto& name : info->names)
    if (!spec.params.count(name)) throw RangeError("missing parameter " + name + " for " + info->token);

  for (std::size_t d = 0; d < doublings; ++d) {
    ConstructionSpec outer;
    outer.kind = ConstructionKind::doubling;
    outer.inner = std::make_shared<const ConstructionSpec>(std::move(spec));
    spec = std::move(outer);
  }
  return spec;
}

std::string to_string(const ConstructionSpec& spec) {
  if (spec.kind == ConstructionKind::doubling) return "double " + to_string(*spec.inner);
  for (const auto& k : kinds()) {
    if (k.kind != spec.kind) continue;
    std::string out = k.token;
    for (const auto& name : k.names) out += " " + name + "=" + std::to_string(spec.at(name));
    return out;
  }
  return {};
}

Family build(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::star:
      return star(spec.at("n"), spec.at("k"), spec.at("c"));
    case ConstructionKind::frankl_A:
      return frankl_A(spec.at("n"), spec.at("k"), spec.at("s"), spec.at("i"));
    case ConstructionKind::family_P:
      return family_P(spec.at("m"), spec.at("s"), spec.at("l"));
    case ConstructionKind::hilton_milner_H:
      return hilton_milner_H(spec.at("n"), spec.at("k"), spec.at("s"));
    case ConstructionKind::threshold:
      return threshold_family(spec.at("n"), spec.at("t"));
    case ConstructionKind::doubling:
      return doubling(build(*spec.inner));
  }
  throw RangeError("unknown construction kind");
}

Count closed_form_size(const ConstructionSpec& spec) {
  auto i64 = [&](const char* name) { return static_cast<std::int64_t>(spec.at(name)); };
  switch (spec.kind) {
    case ConstructionKind::star: {
      require(spec.at("n") >= 1 && spec.at("k") >= 1 && spec.at("k") <= spec.at("n") && spec.at("c") >= 1 &&
                  spec.at("c") <= spec.at("n"),
              "star needs 1 <= k <= n and 1 <= c <= n");
      return binom(i64("n") - 1, i64("k") - 1);
    }
    case ConstructionKind::frankl_A:
      return size_A(spec.at("n"), spec.at("k"), spec.at("s"), spec.at("i"));
    case ConstructionKind::family_P:
      return size_P(spec.at("m"), spec.at("s"), spec.at("l"));
    case ConstructionKind::hilton_milner_H:
      return size_H(spec.at("n"), spec.at("k"), spec.at("s"));
    case ConstructionKind::threshold: {
      require(spec.at("n") >= 1 && spec.at("t") <= spec.at("n") + 1, "threshold_family needs 0 <= t <= n+1");
      Count total = 0;
      for (std::int64_t t = i64("t"); t <= i64("n"); ++t) total += binom(i64("n"), t);
      return total;
    }
    case ConstructionKind::doubling:
      return 2 * closed_form_size(*spec.inner);
  }
  throw RangeError("unknown construction kind");
}

}  // namespace matchless
