#pragma once

#include <stdexcept>
#include <string>

namespace critpoint {

// Internal numeric machinery failed (quadrature blow-up, unbracketable root,
// violated internal identity). The CLI maps this to exit code 3; domain and
// usage errors (std::invalid_argument / std::domain_error) map to exit code 2.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. line() is 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// The process exit convention shared by every front-end tool: 0 success,
// 2 usage/domain/input errors, 3 internal numeric failures (and anything
// unexpected, which is treated as an internal failure).
int cli_exit_code(const std::exception& e);

}  // namespace critpoint
