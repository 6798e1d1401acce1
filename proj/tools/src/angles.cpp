#include <charconv>
#include <numbers>
#include <string>
#include <string_view>

#include "negbin/cli.hpp"
#include "negbin/errors.hpp"

namespace negbin::cli {

namespace {

bool parse_number(std::string_view s, double& value) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);

  double value = 0.0;
  if (parse_number(s, value)) return value;

  const auto at = s.find("pi");
  if (at == std::string_view::npos) throw DomainError("cannot parse angle '" + text + "'");

  std::string_view head = s.substr(0, at);
  std::string_view tail = s.substr(at + 2);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);

  double factor = 1.0;
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty() && head != "+" && !parse_number(head, factor)) {
    throw DomainError("cannot parse angle '" + text + "'");
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/' || !parse_number(tail.substr(1), divisor) || divisor == 0.0) {
      throw DomainError("cannot parse angle '" + text + "'");
    }
  }
  return factor * std::numbers::pi / divisor;
}

}  // namespace negbin::cli
