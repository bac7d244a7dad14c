#pragma once

#include <stdexcept>
#include <string>

namespace primesums {

// Argument outside an operation's documented domain.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A table (sieve, zero list) is too small for the requested computation.
struct OutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Malformed input file; carries the 1-based line number.
struct FormatError : std::runtime_error {
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line(line) {}
  std::size_t line;
};

// Parsed input violating a table invariant (ordering, positivity, emptiness).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical procedure did not reach its tolerance.
struct AccuracyError : std::runtime_error {
  AccuracyError(const std::string& what, double achieved = 0.0)
      : std::runtime_error(what), achieved_estimate(achieved) {}
  double achieved_estimate;
};

// Failure reading or writing a file.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace primesums
