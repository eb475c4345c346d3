#include "hencky/analytic.hpp"

#include <cmath>
#include <sstream>

#include "hencky/errors.hpp"

namespace hencky {

double energy_shape(double a) {
  if (std::abs(a) < 0.5) {
    // Σ_{n≥2} (n-1) aⁿ / n!
    double term = a;  // aⁿ/n! for n = 1
    double sum = 0;
    for (int n = 2; n < 40; ++n) {
      term *= a / n;
      const double add = (n - 1) * term;
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return a * std::exp(a) - std::expm1(a);
}

RodSolution rod(double lambda, const ElasticModuli& moduli) {
  if (!(lambda < 1.0) || !std::isfinite(lambda)) {
    std::ostringstream msg;
    msg << "axial parameter must be finite and below 1 (1 means infinite extension), got " << lambda;
    throw DomainError("lambda", msg.str());
  }
  const double nu = moduli.poisson_ratio();
  const double log_axial = -std::log1p(-lambda);  // ln of the axial stretch

  RodSolution r;
  r.lambda = lambda;
  r.lateral_ratio = std::expm1(nu * log_axial);
  r.axial_stress = moduli.young() * log_axial;
  r.axial_stretch = std::exp(log_axial);
  r.lateral_stretch = std::exp(-nu * log_axial);
  r.secant_modulus = lambda == 0.0 ? moduli.young() : r.axial_stress / lambda;
  r.energy = rod_energy(r.axial_stress, moduli);
  return r;
}

double rod_energy(double axial_stress, const ElasticModuli& moduli) {
  if (!std::isfinite(axial_stress)) throw DomainError("Sz", "axial stress must be finite");
  const double e = moduli.young();
  if (moduli.is_incompressible()) return axial_stress * axial_stress / (2.0 * e);
  const double three_k = 3.0 * moduli.bulk();
  return three_k * three_k / e * energy_shape(axial_stress / three_k);
}

MembraneSolution membrane(double x, const ElasticModuli& moduli) {
  if (!(x < 1.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << "in-plane strain must be finite and below 1, got " << x;
    throw DomainError("x", msg.str());
  }
  const double nu = moduli.poisson_ratio();
  const double log_inplane = -std::log1p(-x);
  const double exponent = 2.0 * nu / (1.0 - nu);  // 2/(m-1)

  MembraneSolution r;
  r.x = x;
  r.lambda = std::expm1(exponent * log_inplane);
  r.inplane_stress = moduli.young() / (1.0 - nu) * log_inplane;
  r.inplane_stretch = std::exp(log_inplane);
  r.thickness_stretch = std::exp(-exponent * log_inplane);
  r.energy = membrane_energy(r.inplane_stress, moduli);
  return r;
}

double membrane_energy(double inplane_stress, const ElasticModuli& moduli) {
  if (!std::isfinite(inplane_stress)) throw DomainError("Sr", "in-plane stress must be finite");
  const double e = moduli.young();
  const double nu = moduli.poisson_ratio();
  if (moduli.is_incompressible()) return (1.0 - nu) * inplane_stress * inplane_stress / e;
  const double three_k = 3.0 * moduli.bulk();
  return (1.0 - nu) * three_k * three_k / (2.0 * e) * energy_shape(2.0 * inplane_stress / three_k);
}

BalloonSolution balloon(double ratio, double thickness, double radius, const ElasticModuli& moduli) {
  auto require_positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      std::ostringstream msg;
      msg << "must be positive and finite, got " << v;
      throw DomainError(name, msg.str());
    }
  };
  require_positive(ratio, "ratio");
  require_positive(thickness, "h");
  require_positive(radius, "R");

  const double nu = moduli.poisson_ratio();
  const double log_ratio = std::log(ratio);

  BalloonSolution b;
  b.thickness = thickness;
  b.radius = radius;
  b.ratio = ratio;
  b.current_radius = ratio * radius;
  b.current_thickness = thickness * std::exp(-2.0 * nu / (1.0 - nu) * log_ratio);
  b.membrane_stress = moduli.young() / (1.0 - nu) * log_ratio;
  b.pressure = 2.0 * moduli.young() * (thickness / radius) / (1.0 - nu) * log_ratio *
               std::exp(-(1.0 + nu) / (1.0 - nu) * log_ratio);
  b.thin_wall_warning = thickness / radius > kThinWallLimit;
  return b;
}

double balloon_peak_ratio(const ElasticModuli& moduli) {
  const double nu = moduli.poisson_ratio();
  return std::exp((1.0 - nu) / (1.0 + nu));
}

}  // namespace hencky
