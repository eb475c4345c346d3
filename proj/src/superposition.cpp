#include "hencky/superposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hencky/errors.hpp"
#include "hencky/spectral.hpp"
#include "hencky/stress.hpp"

namespace hencky {

namespace {

void require_swainger(const Vec3& e, const char* name) {
  for (double v : e)
    if (!(v < 1.0) || !std::isfinite(v)) {
      std::ostringstream msg;
      msg << "Swainger strain " << v << " must be finite and below 1";
      throw DomainError(name, msg.str());
    }
}

}  // namespace

Vec3 compose_coaxial(const Vec3& e, const Vec3& de) {
  require_swainger(e, "state");
  require_swainger(de, "increment");
  Vec3 r{};
  // 1 - (1-e)(1-de) = e + de - e·de
  for (std::size_t i = 0; i < 3; ++i) r[i] = e[i] + de[i] - e[i] * de[i];
  return r;
}

CoaxialIncrement stress_increment_coaxial(const Vec3& de, const ElasticModuli& moduli,
                                          std::optional<double> mean_stress_increment) {
  require_swainger(de, "increment");
  Vec3 d_eps{};
  for (std::size_t i = 0; i < 3; ++i) d_eps[i] = -std::log1p(-de[i]);
  const double tr = d_eps[0] + d_eps[1] + d_eps[2];
  const double two_g = 2.0 * moduli.shear();

  CoaxialIncrement r;
  r.strain_increment = de;
  if (moduli.is_incompressible()) {
    if (!(std::abs(tr) <= kIncompressibilityTolerance)) {
      std::ostringstream msg;
      msg << "incompressible material requires an isochoric increment, log volume change " << tr;
      throw DomainError("increment", msg.str());
    }
    const double p = mean_stress_increment.value_or(0.0);
    for (std::size_t i = 0; i < 3; ++i) r.stress_increment[i] = two_g * (d_eps[i] - tr / 3.0) + p;
    return r;
  }
  if (mean_stress_increment)
    throw DomainError("mean_stress", "determined by the volume change for a compressible material");
  const double coupling = moduli.volumetric_coupling();
  for (std::size_t i = 0; i < 3; ++i) r.stress_increment[i] = two_g * (d_eps[i] + coupling * tr);
  return r;
}

SymTensor3 almansi_from_displacement(const DisplacementGradientField& g) {
  const Tensor3& du = g.du_dx;
  if (!du.is_finite()) throw DomainError("displacement_gradient", "non-finite entry");
  const double det = (Tensor3::identity() - du).determinant();
  if (!(det > 1e-14)) {
    std::ostringstream msg;
    msg << "degenerate motion: det(I - du/dx) = " << det;
    throw DomainError("displacement_gradient", msg.str());
  }
  SymTensor3 e;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = k; l < 3; ++l) {
      double quad = 0;
      for (std::size_t i = 0; i < 3; ++i) quad += du(i, k) * du(i, l);
      e(k, l) = 0.5 * (du(l, k) + du(k, l) - quad);
    }
  return e;
}

namespace {

SymTensor3 series_argument(const SymTensor3& deviator, double mean) {
  if (!deviator.is_finite() || !std::isfinite(mean))
    throw DomainError("reduced_stress", "non-finite entry");
  const double tol = 1e-12 * std::max(1.0, deviator.norm());
  if (!(std::abs(deviator.trace()) <= tol)) {
    std::ostringstream msg;
    msg << "reduced deviatoric stress must be traceless, trace " << deviator.trace();
    throw DomainError("reduced_stress", msg.str());
  }
  return deviator + mean * SymTensor3::identity();
}

// Sums (-1)^(n+1) Aⁿ/n! for n = 1.. . With max_terms > 0 exactly that many
// terms are taken; otherwise the adaptive cut-off applies.
SymTensor3 reduced_series(const SymTensor3& a, int max_terms) {
  const bool adaptive = max_terms <= 0;
  const int limit = adaptive ? kSeriesMaxTerms : max_terms;
  SymTensor3 term = a;  // Aⁿ/n! with alternating sign folded in
  SymTensor3 sum = term;
  for (int n = 2; n <= limit; ++n) {
    term = (-1.0 / n) * sym_product(term, a);
    if (adaptive && spectral_norm(term) < kSeriesTermTolerance) break;
    sum += term;
  }
  return 0.5 * sum;
}

}  // namespace

SymTensor3 strain_from_reduced_stress_series(const SymTensor3& deviator, double mean) {
  return reduced_series(series_argument(deviator, mean), 0);
}

SymTensor3 strain_from_reduced_stress_series(const SymTensor3& deviator, double mean, int terms) {
  if (terms < 1) throw DomainError("terms", "series needs at least one term");
  return reduced_series(series_argument(deviator, mean), terms);
}

SymTensor3 strain_from_reduced_stress(const SymTensor3& deviator, double mean) {
  const SymTensor3 a = series_argument(deviator, mean);
  return spectral_map(a, [](double x) { return -0.5 * std::expm1(-x); });
}

VelocityGradient::VelocityGradient(const Tensor3& grad)
    : grad_(grad), stretching_(grad.symmetric_part()), spin_(grad.skew_part()) {
  if (!grad.is_finite()) throw DomainError("velocity_gradient", "non-finite entry");
}

SymTensor3 almansi_rate(const SymTensor3& e, const SymTensor3& f) {
  // f e + e f is symmetric for symmetric e, f.
  const Tensor3 fe = f * e;
  SymTensor3 r = f;
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t n = m; n < 3; ++n) r(m, n) -= fe(m, n) + fe(n, m);
  return r;
}

SymTensor3 strain_rate_update(const SymTensor3& e, const SymTensor3& f, double dt) {
  return dt * almansi_rate(e, f);
}

SymTensor3 integrate_strain(const SymTensor3& e0, const SymTensor3& f, double duration, double step,
                            RateScheme scheme,
                            const std::function<void(double, const SymTensor3&)>& observer) {
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("step", "must be positive and finite");
  if (!(duration >= 0.0) || !std::isfinite(duration))
    throw DomainError("duration", "must be non-negative and finite");

  SymTensor3 e = e0;
  if (observer) observer(0.0, e);
  const auto steps = static_cast<long long>(std::ceil(duration / step - 1e-9));
  for (long long n = 0; n < steps; ++n) {
    const double t0 = static_cast<double>(n) * step;
    const double h = std::min(step, duration - t0);
    if (scheme == RateScheme::euler) {
      e += strain_rate_update(e, f, h);
    } else {
      const SymTensor3 k1 = almansi_rate(e, f);
      const SymTensor3 k2 = almansi_rate(e + (0.5 * h) * k1, f);
      const SymTensor3 k3 = almansi_rate(e + (0.5 * h) * k2, f);
      const SymTensor3 k4 = almansi_rate(e + h * k3, f);
      e += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    if (observer) observer(n + 1 == steps ? duration : t0 + h, e);
  }
  return e;
}

ReducedStressRate linearized_superposition_rate(const VelocityGradient& v, bool as_printed) {
  const double div = v.divergence();
  const double vol = (as_printed ? 2.0 : -2.0) / 3.0 * div;
  ReducedStressRate r;
  r.deviator_rate = 2.0 * v.stretching() + vol * SymTensor3::identity();
  r.mean_rate = 2.0 / 3.0 * div;
  return r;
}

SymTensor3 corotational_derivative(const SymTensor3& partial_rate, const SymTensor3& advective,
                                   const SymTensor3& stress, const Tensor3& spin) {
  if (!spin.is_finite()) throw DomainError("spin", "non-finite entry");
  const double asym = (spin + spin.transpose()).norm();
  if (!(asym <= 1e-12 * std::max(1.0, spin.norm()))) {
    std::ostringstream msg;
    msg << "spin tensor must be antisymmetric, |ω + ωᵀ| = " << asym;
    throw DomainError("spin", msg.str());
  }
  // ω σ - σ ω = ω σ + (ω σ)ᵀ for antisymmetric ω, symmetric σ.
  const Tensor3 ws = spin * stress;
  SymTensor3 r = partial_rate + advective;
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t n = m; n < 3; ++n) r(m, n) += ws(m, n) + ws(n, m);
  return r;
}

}  // namespace hencky
