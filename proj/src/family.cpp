#include "matchless/family.hpp"

#include <algorithm>
#include <charconv>

#include "matchless/errors.hpp"

namespace matchless {

namespace {

constexpr std::size_t kMaxPowerSetGround = 26;

void check_layer_index(const Family& f, std::size_t k) {
  if (k > f.ground_size())
    throw RangeError("layer " + std::to_string(k) + " outside [0, " + std::to_string(f.ground_size()) + "]");
}

template <class Pred>
Family filter(const Family& f, Pred pred) {
  std::vector<SubsetWord> out;
  for (const auto& m : f)
    if (pred(m)) out.push_back(m);
  return Family(f.ground_size(), std::move(out));
}

std::optional<std::size_t> parse_decimal(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  if (s.size() > 1 && s[0] == '0') return std::nullopt;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Family::Family(std::size_t n) : n_(n) {
  if (n < 1 || n > SubsetWord::kMaxGround)
    throw RangeError("ground-set size " + std::to_string(n) + " outside [1, 1024]");
}

Family::Family(std::size_t n, std::vector<SubsetWord> members) : Family(n) {
  for (const auto& m : members)
    if (m.ground_size() != n) throw RangeError("member ground set differs from family ground set");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

bool Family::contains(const SubsetWord& s) const { return index_of(s).has_value(); }

std::optional<std::size_t> Family::index_of(const SubsetWord& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || !(*it == s)) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

Family layer(const Family& f, std::size_t k) {
  check_layer_index(f, k);
  return filter(f, [k](const SubsetWord& m) { return m.size() == k; });
}

Family layer_at_most(const Family& f, std::size_t k) {
  check_layer_index(f, k);
  return filter(f, [k](const SubsetWord& m) { return m.size() <= k; });
}

Family layer_at_least(const Family& f, std::size_t k) {
  check_layer_index(f, k);
  return filter(f, [k](const SubsetWord& m) { return m.size() >= k; });
}

Count deficiency(const Family& f, std::size_t k) {
  return binom(static_cast<std::int64_t>(f.ground_size()), static_cast<std::int64_t>(k)) - layer(f, k).size();
}

Family restrict_to(const Family& f, const SubsetWord& x) {
  if (x.ground_size() != f.ground_size()) throw RangeError("restriction set lives on a different ground set");
  return filter(f, [&x](const SubsetWord& m) { return m.is_subset_of(x); });
}

void for_each_k_subset(std::size_t n, std::size_t k, const std::function<void(const SubsetWord&)>& fn) {
  if (k > n) return;
  // Combinations in colex order of their index vectors equals ascending
  // numeric bit value, i.e. canonical order within the layer.
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    fn(SubsetWord::from_elements(n, idx));
    // Advance in colex: find the first position that can move up.
    std::size_t i = 0;
    while (i < k && idx[i] + 1 == (i + 1 < k ? idx[i + 1] : n + 1)) ++i;
    if (i == k) return;
    ++idx[i];
    for (std::size_t j = 0; j < i; ++j) idx[j] = j + 1;
  }
}

Family subsets_where(std::size_t n, const std::function<bool(const SubsetWord&)>& pred) {
  if (n > kMaxPowerSetGround)
    throw CapExceeded("enumerating 2^[" + std::to_string(n) + "] exceeds the cap n <= 26");
  std::vector<SubsetWord> out;
  for (std::size_t k = 0; k <= n; ++k)
    for_each_k_subset(n, k, [&](const SubsetWord& s) {
      if (pred(s)) out.push_back(s);
    });
  return Family(n, std::move(out));
}

Family k_subsets_where(std::size_t n, std::size_t k, const std::function<bool(const SubsetWord&)>& pred) {
  if (binom(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)) > Count(1) << 26)
    throw CapExceeded("layer C(" + std::to_string(n) + "," + std::to_string(k) + ") too large to enumerate");
  std::vector<SubsetWord> out;
  for_each_k_subset(n, k, [&](const SubsetWord& s) {
    if (pred(s)) out.push_back(s);
  });
  return Family(n, std::move(out));
}

Family full_layer(std::size_t n, std::size_t k) {
  return k_subsets_where(n, k, [](const SubsetWord&) { return true; });
}

Family power_set(std::size_t n) {
  return subsets_where(n, [](const SubsetWord&) { return true; });
}

Family parse_family(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.empty() || lines[0] != "FAMILY v1") throw ParseError(1, "expected header \"FAMILY v1\"");
  if (lines.size() < 2 || lines[1].substr(0, 2) != "n=") throw ParseError(2, "expected \"n=<decimal>\"");
  auto n = parse_decimal(lines[1].substr(2));
  if (!n || *n < 1 || *n > SubsetWord::kMaxGround) throw ParseError(2, "ground-set size must be in [1, 1024]");

  std::vector<SubsetWord> members;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const std::size_t line_no = li + 1;
    auto line = lines[li];
    if (line.empty()) throw ParseError(line_no, "empty line");
    SubsetWord set(*n);
    if (line != "-") {
      std::size_t prev = 0;
      std::size_t start = 0;
      while (start <= line.size()) {
        auto comma = line.find(',', start);
        auto token = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        auto e = parse_decimal(token);
        if (!e) throw ParseError(line_no, "bad element \"" + std::string(token) + "\"");
        if (*e < 1 || *e > *n) throw ParseError(line_no, "element " + std::to_string(*e) + " outside [1, n]");
        if (*e <= prev) throw ParseError(line_no, "elements not strictly increasing");
        set.insert(*e);
        prev = *e;
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    members.push_back(set);
  }
  std::vector<SubsetWord> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    // Report the second occurrence in input order.
    std::size_t seen = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i] == *dup && ++seen == 2) throw ParseError(i + 3, "duplicate set " + dup->to_string());
    }
  }
  return Family(*n, std::move(sorted));
}

std::string serialize_family(const Family& f) {
  std::string out = "FAMILY v1\nn=" + std::to_string(f.ground_size()) + "\n";
  for (const auto& m : f) {
    out += m.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace matchless

namespace matchless {

Params Params::from_msl(std::size_t m, std::size_t s, std::size_t l) {
  if (m < 1 || s < 1 || l < 1 || l > s)
    throw RangeError("parameters need m >= 1, s >= 1 and 1 <= l <= s (got m=" + std::to_string(m) +
                     " s=" + std::to_string(s) + " l=" + std::to_string(l) + ")");
  return Params{s * m + s - l, s, m, l};
}

}  // namespace matchless
