#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "matchless/count.hpp"
#include "matchless/family.hpp"
#include "matchless/oracle.hpp"

namespace matchless {

inline constexpr const char* kToolName = "matchless";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitCapped = 3 };

/// True when MATCHLESS_TEST=1; timing fields are then reported as zero.
bool test_mode();

/// Checks P(m,s,l) against ground truth: nu(P) < s, and where the oracle
/// is feasible, |P| = e(n,s) and the low-layer bound
/// |F^{(<=m+1)}| <= |P^{(<=m+1)}| both for the oracle's witness and for
/// the exact maximum over all families.
struct ConjectureCheck {
  Params params;
  Count size_P;
  std::size_t nu_P = 0;
  Count size_P_low;
  std::optional<OracleResult> oracle;
  std::optional<OracleResult> low_oracle;
  std::optional<Count> witness_low;
  /// "EQUAL", "DIFFERENT", or "UNCHECKED" when n is past the oracle cap.
  std::string verdict;
  std::optional<bool> strong_form;
  /// l <= ceil(s/2), where P is conjectured to be extremal. Outside it a
  /// mismatch is reported but does not count as a failure.
  bool in_conjectured_range = true;

  bool passed() const;
};

/// Throws CapExceeded when P itself is too large to examine (n > 16).
ConjectureCheck verify_conjecture(std::size_t m, std::size_t s, std::size_t l, const OracleLimits& limits = {});

/// Runs one command line (without the program name) and returns its exit
/// code. Regular output goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchless
