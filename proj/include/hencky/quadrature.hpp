#pragma once

#include <cstddef>
#include <functional>

namespace hencky {

using ScalarFunction = std::function<double(double)>;

struct QuadratureOptions {
  double relative_tolerance = 1e-10;
  double absolute_tolerance = 1e-300;
  /// Maximum number of integrand evaluations.
  std::size_t budget = 2'000'000;
};

struct QuadratureResult {
  double value = 0;
  /// Estimated error (difference of successive refinements, Richardson-scaled).
  double error = 0;
  std::size_t evaluations = 0;
};

/// Adaptive Simpson quadrature with Richardson correction. Throws
/// AccuracyError, carrying the best estimate and remaining gap, when the
/// budget runs out before the tolerance is met.
QuadratureResult adaptive_simpson(const ScalarFunction& f, double a, double b,
                                  const QuadratureOptions& options = {});

/// Composite Simpson rule on `panels` equal panels (fourth order).
double composite_simpson(const ScalarFunction& f, double a, double b, std::size_t panels);

struct Extremum {
  double location = 0;
  double value = 0;
};

/// Golden-section search for the maximum of a unimodal f on [a, b].
Extremum golden_section_maximize(const ScalarFunction& f, double a, double b, double tolerance = 1e-10);

}  // namespace hencky
