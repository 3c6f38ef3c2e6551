#pragma once

#include <stdexcept>
#include <string>

namespace avoidgray {

/// Malformed or out-of-range input: bad alphabet, symbol >= q, length mismatch.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// diff_span asked for a pair of identical words.
class SpanError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A brute-force or materializing operation would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace avoidgray
