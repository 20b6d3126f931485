#pragma once

#include <stdexcept>
#include <string>

namespace clearbound {

// Malformed caller input: dimension mismatches, bad geometry parameters,
// out-of-range arguments, unparseable or semantically invalid files.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature exhausted its recursion depth before reaching the
// requested tolerance. Carries the best estimate and a bound on its error.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_bound)
      : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double best_estimate_;
  double error_bound_;
};

// Rendering was requested for a scenario the SVG backend cannot draw.
class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clearbound
