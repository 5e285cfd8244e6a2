#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace tailbound {

/// Thrown when the level budget runs out before the tolerance is met.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int levels = 0;
};

/// Tanh-sinh integral of f over (lo, hi). f is never evaluated at the
/// endpoints. Converged when successive levels differ by at most
/// tol * (1 + |result|).
///
/// Throws std::domain_error if f returns a non-finite value and AccuracyError
/// if the level budget is exhausted.
QuadratureResult integrate_detailed(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12);

double integrate(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12);

}  // namespace tailbound
