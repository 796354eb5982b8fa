#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padiclab {

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the mathematical domain of an operation.
class domain_error : public error {
 public:
  using error::error;
};

/// A result cannot be determined at the available working precision.
class precision_error : public error {
 public:
  using error::error;
};

class context_mismatch : public error {
 public:
  using error::error;
};

class division_by_zero : public error {
 public:
  using error::error;
};

/// Known-order bookkeeping of truncated series was violated.
class order_error : public error {
 public:
  using error::error;
};

/// A construction procedure is inapplicable to its input (e.g. B' = 0).
class procedure_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace padiclab
