#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchless/formulas.hpp"

namespace matchless {

struct GridAxis {
  std::string name;
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// "target:name=a..b,name=c": inclusive ranges, first axis outermost.
struct Grid {
  std::string target;
  std::vector<GridAxis> axes;
};

/// Throws RangeError on malformed specs, unknown targets, or a parameter
/// set that does not match the target.
Grid parse_grid(std::string_view text);

/// Targets accepted by parse_grid with their parameter names.
const std::vector<std::pair<std::string, std::vector<std::string>>>& report_targets();

enum class PointStatus { ok, failed, skipped, capped };
std::string_view to_string(PointStatus status);

struct PointResult {
  std::size_t index = 0;
  std::vector<std::pair<std::string, std::size_t>> params;
  PointStatus status = PointStatus::ok;
  std::optional<Verdict> verdict;
  std::optional<std::string> value;
  std::optional<std::uint64_t> nodes;
  std::optional<double> elapsed_ms;
  std::string note;
};

struct Report {
  std::string command;
  Grid grid;
  std::vector<PointResult> points;

  std::size_t count(PointStatus status) const;
};

/// Evaluates every grid point; points run on up to `threads` workers but
/// appear in grid order.
Report run_report(const Grid& grid, std::string command, unsigned threads = 1);

/// Fixed columns: index,target,params,status,holds,lhs,rhs,margin,value,
/// regime_note,nodes,elapsed_ms.
std::string report_csv(const Report& report);
std::string report_json(const Report& report);

/// 1 if any point failed, else 3 if any hit a cap, else 0.
int report_exit_code(const Report& report);

}  // namespace matchless
