#pragma once

#include <stdexcept>
#include <string>

namespace retcache {

// A scenario, demand, plan or config input that breaks a documented
// invariant. Mapped to exit code 3 by the CLI.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed structured text (unparseable JSON, wrong field types).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by the brute-force oracles when the requested search space exceeds
// their hard bound. Carries log10 of the space so callers can report sizes
// that overflow double. Mapped to exit code 4 by the CLI.
class SizeGuardError : public std::runtime_error {
 public:
  SizeGuardError(const std::string& message, double search_space_log10)
      : std::runtime_error(message), log10_space_(search_space_log10) {}

  double search_space_log10() const { return log10_space_; }

 private:
  double log10_space_;
};

}  // namespace retcache
