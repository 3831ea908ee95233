#include "matchless/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "evaluate.hpp"
#include "json_io.hpp"
#include "matchless/cli.hpp"
#include "matchless/constructions.hpp"
#include "matchless/errors.hpp"
#include "matchless/oracle.hpp"

namespace matchless {

namespace {

constexpr std::size_t kMaxGridPoints = 1'000'000;

std::size_t parse_number(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || value > 1'000'000'000)
    throw RangeError("bad number '" + std::string(text) + "' in " + std::string(what));
  return value;
}

const std::vector<std::string>* target_params(std::string_view name) {
  for (const auto& [target, params] : report_targets())
    if (target == name) return &params;
  return nullptr;
}

Verdict equality_verdict(const Count& lhs, const Count& rhs) {
  Verdict v;
  v.lhs = Ratio(lhs);
  v.rhs = Ratio(rhs);
  v.margin = v.rhs - v.lhs;
  v.holds = lhs == rhs;
  return v;
}

void evaluate(const std::string& target, const detail::ParamMap& p, PointResult& r) {
  auto record_oracle = [&](const OracleResult& o) {
    r.value = to_string(o.value);
    r.nodes = o.nodes;
    r.elapsed_ms = detail::shown_elapsed(o.elapsed_ms);
  };
  const bool is_check = std::any_of(detail::check_kinds().begin(), detail::check_kinds().end(),
                                    [&](const auto& k) { return k.name == target; });
  if (is_check) {
    r.verdict = detail::evaluate_check(target, p);
    r.status = r.verdict->holds ? PointStatus::ok : PointStatus::failed;
  } else if (target == "kleitman") {
    r.value = to_string(kleitman_value(p.at("n"), p.at("s")));
  } else if (target == "size-A") {
    r.value = to_string(size_A(p.at("n"), p.at("k"), p.at("s"), p.at("i")));
  } else if (target == "size-P") {
    r.value = to_string(size_P(p.at("m"), p.at("s"), p.at("l")));
  } else if (target == "size-H") {
    r.value = to_string(size_H(p.at("n"), p.at("k"), p.at("s")));
  } else if (target == "smallest-t") {
    r.value = std::to_string(smallest_t(p.at("m")));
  } else if (target == "find-t") {
    const auto t = find_valid_t(p.at("m"), p.at("s"), p.at("l"));
    if (t)
      r.value = std::to_string(*t);
    else
      r.note = "no valid t up to " + std::to_string(default_t_max(p.at("m")));
  } else if (target == "oracle-e") {
    record_oracle(oracle_e(p.at("n"), p.at("s")));
  } else if (target == "oracle-ek") {
    record_oracle(oracle_ek(p.at("n"), p.at("k"), p.at("s")));
  } else if (target == "ek-max") {
    const std::size_t n = p.at("n"), k = p.at("k"), s = p.at("s");
    if (n < s * k) throw RangeError("ek-max needs n >= s*k");
    const OracleResult o = oracle_ek(n, k, s);
    record_oracle(o);
    r.verdict = equality_verdict(o.value, std::max(size_A(n, k, s, 1), size_A(n, k, s, k)));
    r.status = r.verdict->holds ? PointStatus::ok : PointStatus::failed;
  } else if (target == "conjecture") {
    const ConjectureCheck c = verify_conjecture(p.at("m"), p.at("s"), p.at("l"));
    r.value = to_string(c.size_P);
    if (c.oracle) {
      r.verdict = equality_verdict(c.oracle->value, c.size_P);
      r.nodes = c.oracle->nodes;
      r.elapsed_ms = detail::shown_elapsed(c.oracle->elapsed_ms);
    }
    r.note = c.verdict;
    r.status = c.passed() ? PointStatus::ok : PointStatus::failed;
  }
}

PointResult evaluate_point(const Grid& grid, std::size_t index) {
  PointResult r;
  r.index = index;
  // Mixed-radix decode, last axis fastest.
  std::vector<std::size_t> values(grid.axes.size());
  std::size_t rest = index;
  for (std::size_t i = grid.axes.size(); i-- > 0;) {
    const auto& axis = grid.axes[i];
    const std::size_t span = axis.hi - axis.lo + 1;
    values[i] = axis.lo + rest % span;
    rest /= span;
  }
  detail::ParamMap params;
  for (std::size_t i = 0; i < grid.axes.size(); ++i) {
    r.params.emplace_back(grid.axes[i].name, values[i]);
    params[grid.axes[i].name] = values[i];
  }
  try {
    evaluate(grid.target, params, r);
  } catch (const CapExceeded& e) {
    r = PointResult{index, r.params, PointStatus::capped, {}, {}, {}, {}, e.what()};
  } catch (const std::invalid_argument& e) {
    r = PointResult{index, r.params, PointStatus::skipped, {}, {}, {}, {}, e.what()};
  } catch (const std::domain_error& e) {
    r = PointResult{index, r.params, PointStatus::skipped, {}, {}, {}, {}, e.what()};
  }
  return r;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

}  // namespace

const std::vector<std::pair<std::string, std::vector<std::string>>>& report_targets() {
  static const auto targets = [] {
    std::vector<std::pair<std::string, std::vector<std::string>>> t;
    for (const auto& kind : detail::check_kinds()) t.emplace_back(kind.name, kind.params);
    t.emplace_back("kleitman", std::vector<std::string>{"n", "s"});
    t.emplace_back("size-A", std::vector<std::string>{"n", "k", "s", "i"});
    t.emplace_back("size-P", std::vector<std::string>{"m", "s", "l"});
    t.emplace_back("size-H", std::vector<std::string>{"n", "k", "s"});
    t.emplace_back("smallest-t", std::vector<std::string>{"m"});
    t.emplace_back("find-t", std::vector<std::string>{"m", "s", "l"});
    t.emplace_back("oracle-e", std::vector<std::string>{"n", "s"});
    t.emplace_back("oracle-ek", std::vector<std::string>{"n", "k", "s"});
    t.emplace_back("ek-max", std::vector<std::string>{"n", "k", "s"});
    t.emplace_back("conjecture", std::vector<std::string>{"m", "s", "l"});
    return t;
  }();
  return targets;
}

std::string_view to_string(PointStatus status) {
  switch (status) {
    case PointStatus::ok:
      return "OK";
    case PointStatus::failed:
      return "FAILED";
    case PointStatus::skipped:
      return "SKIPPED";
    case PointStatus::capped:
      return "CAPPED";
  }
  return "OK";
}

Grid parse_grid(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw RangeError("grid spec needs 'target:' prefix");
  Grid grid;
  grid.target = std::string(text.substr(0, colon));
  const auto* names = target_params(grid.target);
  if (names == nullptr) throw RangeError("unknown report target '" + grid.target + "'");

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw RangeError("grid axis '" + std::string(item) + "' needs name=range");
    GridAxis axis;
    axis.name = std::string(item.substr(0, eq));
    const std::string_view range = item.substr(eq + 1);
    const auto dots = range.find("..");
    axis.lo = parse_number(range.substr(0, dots), axis.name);
    axis.hi = dots == std::string_view::npos ? axis.lo : parse_number(range.substr(dots + 2), axis.name);
    if (axis.hi < axis.lo) throw RangeError("empty range for " + axis.name);
    if (std::find(names->begin(), names->end(), axis.name) == names->end())
      throw RangeError("target " + grid.target + " has no parameter '" + axis.name + "'");
    if (std::any_of(grid.axes.begin(), grid.axes.end(), [&](const auto& x) { return x.name == axis.name; }))
      throw RangeError("parameter '" + axis.name + "' given twice");
    grid.axes.push_back(axis);
  }
  for (const auto& name : *names)
    if (std::none_of(grid.axes.begin(), grid.axes.end(), [&](const auto& x) { return x.name == name; }))
      throw RangeError("target " + grid.target + " needs parameter '" + name + "'");

  std::size_t total = 1;
  for (const auto& axis : grid.axes) {
    total *= axis.hi - axis.lo + 1;
    if (total > kMaxGridPoints) throw RangeError("grid has more than " + std::to_string(kMaxGridPoints) + " points");
  }
  return grid;
}

std::size_t Report::count(PointStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [&](const auto& p) { return p.status == status; }));
}

Report run_report(const Grid& grid, std::string command, unsigned threads) {
  std::size_t total = 1;
  for (const auto& axis : grid.axes) total *= axis.hi - axis.lo + 1;
  Report report{std::move(command), grid, std::vector<PointResult>(total)};

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) report.points[i] = evaluate_point(grid, i);
  };
  const unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(total, 1)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return report;
}

std::string report_csv(const Report& report) {
  std::ostringstream os;
  os << "index,target,params,status,holds,lhs,rhs,margin,value,regime_note,nodes,elapsed_ms\n";
  for (const auto& p : report.points) {
    std::string params;
    for (const auto& [name, value] : p.params) {
      if (!params.empty()) params += ';';
      params += name + '=' + std::to_string(value);
    }
    os << p.index << ',' << report.grid.target << ',' << params << ',' << to_string(p.status) << ',';
    if (p.verdict) {
      os << (p.verdict->holds ? "true" : "false") << ',' << to_string(p.verdict->lhs) << ','
         << to_string(p.verdict->rhs) << ',' << to_string(p.verdict->margin) << ',';
    } else {
      os << ",,,,";
    }
    os << p.value.value_or("") << ',';
    os << csv_field(p.verdict && p.verdict->regime_note ? *p.verdict->regime_note : "") << ',';
    os << (p.nodes ? std::to_string(*p.nodes) : "") << ',';
    os << (p.elapsed_ms ? format_ms(*p.elapsed_ms) : "") << '\n';
  }
  return os.str();
}

std::string report_json(const Report& report) {
  using detail::Json;
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = report.command;
  j["target"] = report.grid.target;
  Json axes = Json::array();
  for (const auto& axis : report.grid.axes) axes.push_back(Json{{"name", axis.name}, {"lo", axis.lo}, {"hi", axis.hi}});
  j["grid"] = axes;
  Json points = Json::array();
  for (const auto& p : report.points) {
    Json point;
    point["index"] = p.index;
    Json params = Json::object();
    for (const auto& [name, value] : p.params) params[name] = value;
    point["params"] = params;
    point["status"] = to_string(p.status);
    point["verdict"] = p.verdict ? detail::verdict_json(*p.verdict) : Json(nullptr);
    point["value"] = p.value ? Json(*p.value) : Json(nullptr);
    point["nodes"] = p.nodes ? Json(*p.nodes) : Json(nullptr);
    point["elapsed_ms"] = p.elapsed_ms ? Json(*p.elapsed_ms) : Json(nullptr);
    point["note"] = p.note;
    points.push_back(point);
  }
  j["points"] = points;
  j["summary"] = Json{{"total", report.points.size()},
                      {"ok", report.count(PointStatus::ok)},
                      {"failed", report.count(PointStatus::failed)},
                      {"skipped", report.count(PointStatus::skipped)},
                      {"capped", report.count(PointStatus::capped)}};
  return j.dump(2) + '\n';
}

int report_exit_code(const Report& report) {
  if (report.count(PointStatus::failed) > 0) return kExitFailed;
  if (report.count(PointStatus::capped) > 0) return kExitCapped;
  return kExitOk;
}

}  // namespace matchless
