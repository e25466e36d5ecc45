#pragma once

#include <stdexcept>
#include <string>

namespace ucon {

/// A configured work limit (search nodes, oracle combinations, branch count) would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double required)
      : std::runtime_error(what), required_(required) {}
  double required() const { return required_; }

 private:
  double required_;
};

/// The Λ bracket could not be narrowed to the requested width.
class PrecisionExhausted : public std::runtime_error {
 public:
  PrecisionExhausted(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

}  // namespace ucon
