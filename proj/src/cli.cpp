#include "matchless/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "evaluate.hpp"
#include "json_io.hpp"
#include "matchless/constructions.hpp"
#include "matchless/errors.hpp"
#include "matchless/formulas.hpp"
#include "matchless/matchings.hpp"
#include "matchless/report.hpp"
#include "matchless/shifting.hpp"

namespace matchless {

namespace {

using detail::Json;

// nu on P gets slow past this ground size.
constexpr std::size_t kVerifyMaxGround = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

detail::ParamMap parse_assignments(const std::vector<std::string>& tokens, const std::vector<std::string>& names) {
  detail::ParamMap params;
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
      throw UsageError("expected name=value, got '" + tok + "'");
    const std::string name = tok.substr(0, eq);
    const std::string digits = tok.substr(eq + 1);
    if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown parameter '" + name + "'");
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        digits.size() > 9)
      throw UsageError("parameter " + name + " needs a nonnegative integer");
    if (!params.emplace(name, std::stoul(digits)).second) throw UsageError("parameter '" + name + "' given twice");
  }
  for (const auto& name : names)
    if (!params.contains(name)) throw UsageError("missing parameter '" + name + "'");
  return params;
}

Json params_json(const detail::ParamMap& params, const std::vector<std::string>& order) {
  Json j = Json::object();
  for (const auto& name : order) j[name] = params.at(name);
  return j;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json conjecture_json(const ConjectureCheck& c) {
  Json j;
  j["m"] = c.params.m;
  j["s"] = c.params.s;
  j["l"] = c.params.l;
  j["n"] = c.params.n;
  j["size_P"] = to_string(c.size_P);
  j["nu_P"] = c.nu_P;
  j["size_P_low"] = to_string(c.size_P_low);
  j["oracle"] = c.oracle ? detail::oracle_json(*c.oracle, std::nullopt) : Json(nullptr);
  j["oracle_low"] = c.low_oracle ? detail::oracle_json(*c.low_oracle, std::nullopt) : Json(nullptr);
  j["witness_low"] = c.witness_low ? Json(to_string(*c.witness_low)) : Json(nullptr);
  j["in_conjectured_range"] = c.in_conjectured_range;
  j["verdict"] = c.verdict;
  j["strong_form"] = c.strong_form ? Json(*c.strong_form) : Json(nullptr);
  j["status"] = c.passed() ? "ok" : "failed";
  return j;
}

}  // namespace

bool test_mode() {
  const char* v = std::getenv("MATCHLESS_TEST");
  return v != nullptr && std::string_view(v) == "1";
}

bool ConjectureCheck::passed() const {
  if (nu_P >= params.s) return false;
  return !in_conjectured_range || (verdict != "DIFFERENT" && strong_form.value_or(true));
}

ConjectureCheck verify_conjecture(std::size_t m, std::size_t s, std::size_t l, const OracleLimits& limits) {
  ConjectureCheck c;
  c.params = Params::from_msl(m, s, l);
  c.in_conjectured_range = 2 * l <= s + 1;
  const std::size_t n = c.params.n;
  if (n > kVerifyMaxGround)
    throw CapExceeded("verify conjecture is capped at n <= " + std::to_string(kVerifyMaxGround));
  const std::size_t low = std::min(m + 1, n);
  const Family p = family_P(m, s, l);
  c.size_P = p.size();
  c.nu_P = nu(p).value;
  c.size_P_low = layer_at_most(p, low).size();
  if (s >= 2 && n <= std::min<std::size_t>(limits.max_n, 7)) {
    c.oracle = oracle_e(n, s, false, limits);
    c.low_oracle = oracle_e_upto(n, s, low, false, limits);
    c.witness_low = Count(layer_at_most(c.oracle->witness, low).size());
    c.verdict = c.oracle->value == c.size_P ? "EQUAL" : "DIFFERENT";
    c.strong_form = *c.witness_low <= c.size_P_low && c.low_oracle->value <= c.size_P_low;
  } else {
    c.verdict = "UNCHECKED";
  }
  return c;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set families with bounded matching number", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  std::function<int()> action;

  // construct / size
  auto* construct = app.add_subcommand("construct", "Build a named family and print it in FAMILY v1 format");
  std::vector<std::string> spec_tokens;
  std::string output_path;
  construct->add_option("spec", spec_tokens, "Construction, e.g. 'P m=1 s=4 l=2'")->required();
  construct->add_option("-o,--output", output_path, "Write the family to this file instead");
  construct->callback([&] {
    action = [&] {
      const Family f = build(parse_construction_spec(join(spec_tokens)));
      if (output_path.empty()) {
        out << serialize_family(f);
      } else {
        write_file(output_path, serialize_family(f));
        out << "wrote " << f.size() << " sets to " << output_path << '\n';
      }
      return kExitOk;
    };
  });

  auto* size = app.add_subcommand("size", "Closed-form size of a construction");
  size->add_option("spec", spec_tokens, "Construction, e.g. 'A n=6 k=2 s=3 i=1'")->required();
  size->callback([&] {
    action = [&] {
      out << to_string(closed_form_size(parse_construction_spec(join(spec_tokens)))) << '\n';
      return kExitOk;
    };
  });

  // nu / shift
  std::string family_path;
  auto* nu_cmd = app.add_subcommand("nu", "Matching number of a family file, with a maximum matching");
  nu_cmd->add_option("family", family_path, "FAMILY v1 file")->required();
  nu_cmd->callback([&] {
    action = [&] {
      const Family f = parse_family(read_file(family_path));
      const NuResult r = nu(f);
      Json j;
      j["n"] = f.ground_size();
      j["sets"] = f.size();
      j["nu"] = r.value;
      j["witness"] = detail::sets_json(r.witness);
      print_json(out, j);
      return kExitOk;
    };
  });

  auto* shift = app.add_subcommand("shift", "Shift a family file (closure by default)");
  bool shift_closure_flag = false, shift_check = false;
  std::vector<std::size_t> pair;
  shift->add_option("family", family_path, "FAMILY v1 file")->required();
  auto* closure_opt = shift->add_flag("--closure", shift_closure_flag, "Apply all shifts until nothing changes");
  auto* pair_opt = shift->add_option("--pair", pair, "Apply the single shift (i, j)")->expected(2);
  auto* check_opt = shift->add_flag("--check", shift_check, "Only report whether the family is shifted");
  closure_opt->excludes(pair_opt)->excludes(check_opt);
  pair_opt->excludes(check_opt);
  shift->callback([&] {
    action = [&] {
      const Family f = parse_family(read_file(family_path));
      if (shift_check) {
        Json j;
        j["shifted"] = is_shifted(f);
        print_json(out, j);
      } else if (!pair.empty()) {
        out << serialize_family(shift_ij(f, ShiftPair(pair[0], pair[1], f.ground_size())));
      } else {
        out << serialize_family(shift_closure(f));
      }
      return kExitOk;
    };
  });

  // formulas
  std::size_t a = 0, b = 0, c = 0;
  auto* kleitman = app.add_subcommand("kleitman", "e(n,s) for n = -1 or 0 mod s");
  kleitman->add_option("n", a)->required();
  kleitman->add_option("s", b)->required();
  kleitman->callback([&] {
    action = [&] {
      out << to_string(kleitman_value(a, b)) << '\n';
      return kExitOk;
    };
  });

  auto* check = app.add_subcommand("check", "Certify one inequality exactly");
  check->require_subcommand(1);
  std::vector<std::string> assignments;
  for (const auto& kind : detail::check_kinds()) {
    std::string usage;
    for (const auto& p : kind.params) usage += p + "=<int> ";
    auto* sub = check->add_subcommand(kind.name, "Parameters: " + usage);
    sub->add_option("params", assignments, "name=value pairs")->required();
    sub->callback([&, kind] {
      action = [&, kind] {
        const auto params = parse_assignments(assignments, kind.params);
        Json j;
        j["check"] = kind.name;
        j["params"] = params_json(params, kind.params);
        try {
          const Verdict v = detail::evaluate_check(kind.name, params);
          j["status"] = v.holds ? "ok" : "failed";
          j["verdict"] = detail::verdict_json(v);
          print_json(out, j);
          return v.holds ? kExitOk : kExitFailed;
        } catch (const OutOfRegime& e) {
          j["status"] = "out_of_regime";
          j["reason"] = e.what();
          print_json(out, j);
          return kExitUsage;
        }
      };
    });
  }

  auto* smallest = app.add_subcommand("smallest-t", "Least t satisfying the t-selection rule for m");
  smallest->add_option("m", a)->required();
  smallest->callback([&] {
    action = [&] {
      out << smallest_t(a) << '\n';
      return kExitOk;
    };
  });

  auto* find_t = app.add_subcommand("find-t", "Least t meeting all three conditions");
  std::optional<std::size_t> t_max;
  find_t->add_option("m", a)->required();
  find_t->add_option("s", b)->required();
  find_t->add_option("l", c)->required();
  find_t->add_option("--t-max", t_max, "Search cap (default 10*smallest_t(m)+10)");
  find_t->callback([&] {
    action = [&] {
      const Params p = Params::from_msl(a, b, c);
      const std::size_t cap = t_max.value_or(default_t_max(a));
      const auto t = find_valid_t(a, b, c, cap);
      Json j;
      j["m"] = p.m;
      j["s"] = p.s;
      j["l"] = p.l;
      j["n"] = p.n;
      j["t_max"] = cap;
      j["t"] = t ? Json(*t) : Json(nullptr);
      if (t) {
        j["cond1"] = detail::verdict_json(check_condition_1(a, b, c, *t));
        j["cond2"] = detail::verdict_json(check_condition_2(a, b, c, *t));
        j["cond3"] = detail::verdict_json(condition3_regime(a, c, *t, p.n));
      }
      print_json(out, j);
      return kExitOk;
    };
  });

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact extremal values on tiny instances");
  oracle->require_subcommand(1);
  std::optional<std::string> witness_path;
  OracleLimits limits;
  bool shifted = false, unrestricted = false;
  std::optional<std::size_t> max_size;
  auto emit_oracle = [&](const OracleResult& r) {
    if (witness_path) write_file(*witness_path, serialize_family(r.witness));
    print_json(out, detail::oracle_json(r, witness_path));
    return kExitOk;
  };
  auto* oracle_e_cmd = oracle->add_subcommand("e", "e(n,s): largest family on [n] without s disjoint sets");
  oracle_e_cmd->add_option("n", a)->required();
  oracle_e_cmd->add_option("s", b)->required();
  oracle_e_cmd->add_flag("--shifted", shifted, "Search shifted families only");
  oracle_e_cmd->add_option("--max-size", max_size, "Only use sets of at most this size");
  oracle_e_cmd->add_option("--witness", witness_path, "Write the extremal family here");
  oracle_e_cmd->add_option("--node-limit", limits.node_limit, "Branch-and-bound node cap");
  oracle_e_cmd->callback([&] {
    action = [&] { return emit_oracle(oracle_e_upto(a, b, max_size.value_or(a), shifted, limits)); };
  });
  auto* oracle_ek_cmd = oracle->add_subcommand("ek", "e_k(n,s): the same within the k-th layer");
  oracle_ek_cmd->add_option("n", a)->required();
  oracle_ek_cmd->add_option("k", b)->required();
  oracle_ek_cmd->add_option("s", c)->required();
  oracle_ek_cmd->add_flag("--unrestricted", unrestricted, "Search all k-uniform families, not only shifted ones");
  oracle_ek_cmd->add_option("--witness", witness_path, "Write the extremal family here");
  oracle_ek_cmd->add_option("--node-limit", limits.node_limit, "Branch-and-bound node cap");
  oracle_ek_cmd->callback([&] { action = [&] { return emit_oracle(oracle_ek(a, b, c, !unrestricted, limits)); }; });

  // verify
  auto* verify = app.add_subcommand("verify", "Check a conjectured extremal family against ground truth");
  verify->require_subcommand(1);
  auto* conjecture = verify->add_subcommand("conjecture", "P(m,s,l) against e(sm+s-l, s)");
  conjecture->add_option("m", a)->required();
  conjecture->add_option("s", b)->required();
  conjecture->add_option("l", c)->required();
  conjecture->callback([&] {
    action = [&] {
      const ConjectureCheck check_result = verify_conjecture(a, b, c);
      print_json(out, conjecture_json(check_result));
      return check_result.passed() ? kExitOk : kExitFailed;
    };
  });

  // report
  auto* report = app.add_subcommand("report", "Evaluate a target over a parameter grid");
  std::string grid_text, format;
  unsigned threads = 1;
  report->add_option("--grid", grid_text, "target:name=a..b,name=c")->required();
  report->add_option("--out", format, "Output format")->required()->check(CLI::IsMember({"csv", "json"}));
  report->add_option("-o,--output", output_path, "Write the report to this file");
  report->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  report->callback([&] {
    action = [&] {
      std::string command = kToolName;
      for (const auto& arg : args) command += ' ' + arg;
      const Report r = run_report(parse_grid(grid_text), command, threads);
      const std::string text = format == "csv" ? report_csv(r) : report_json(r);
      if (output_path.empty())
        out << text;
      else
        write_file(output_path, text);
      return report_exit_code(r);
    };
  });

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "error: unknown subcommand '" << args.front() << "'\n";
    return kExitUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: resource cap exceeded: " << e.what() << '\n';
    return kExitCapped;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace matchless
