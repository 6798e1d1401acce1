#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace negbin::cli {

enum class Exit : int { kOk = 0, kDomain = 1, kContract = 2, kIo = 3 };

/// Parses an angle: a plain number, or a multiple of pi such as "pi",
/// "3pi/4", "-pi/2", "0.5*pi". Throws DomainError on anything else.
[[nodiscard]] double parse_angle(const std::string& text);

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;

  // NaN residuals fail.
  [[nodiscard]] bool passed() const { return residual <= tolerance; }
};

struct VerifyReport {
  std::vector<Check> checks;
  double seconds = 0.0;

  [[nodiscard]] bool passed() const;
};

/// Runs the invariant suite of all modules. A tolerance override replaces the
/// tolerance of every check.
[[nodiscard]] VerifyReport run_verify(std::optional<double> tolerance_override = std::nullopt);

void write_verify_text(std::ostream& out, const VerifyReport& report);
[[nodiscard]] std::string verify_json(const VerifyReport& report);

/// Entry point of the `negbin` tool. Returns the process exit code; all
/// diagnostics go to err as a single line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace negbin::cli
