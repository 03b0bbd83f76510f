#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>

namespace bras {

/// Thrown when adaptive integration cannot reach the requested tolerance;
/// carries the error estimate that was achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error(achieved) {}
  double achieved_error;
};

struct QuadratureResult {
  std::complex<double> value{};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of a complex-valued function
/// over [a, b]. Panels are bisected worst-first until the summed error
/// estimate drops below max(abs_tol, rel_tol * |value|). Throws
/// QuadratureError if the panel budget is exhausted first.
QuadratureResult integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double rel_tol, double abs_tol = 0.0, std::size_t max_panels = 4000);

}  // namespace bras
