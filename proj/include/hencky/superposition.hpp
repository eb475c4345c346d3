#pragma once

#include <functional>
#include <optional>

#include "hencky/moduli.hpp"
#include "hencky/tensor.hpp"

namespace hencky {

// ---------------------------------------------------------------------------
// Coaxial superposition (principal axes fixed in space)
// ---------------------------------------------------------------------------

/// Swainger strain after applying increment `de` to state `e`:
///   1 - e'_i = (1 - e_i)(1 - de_i).
Vec3 compose_coaxial(const Vec3& e, const Vec3& de);

struct CoaxialIncrement {
  Vec3 strain_increment{};  // Swainger Δe_i
  Vec3 stress_increment{};  // Cauchy ΔS_i
};

/// ΔS_i = -2G ln[(1-Δe_i) Π_j(1-Δe_j)^(k-1/3)]. Depends on the increment
/// only, whatever the prior coaxial state. For incompressible moduli the
/// increment must be isochoric and `mean_stress_increment` supplies ΔS.
CoaxialIncrement stress_increment_coaxial(const Vec3& de, const ElasticModuli& moduli,
                                          std::optional<double> mean_stress_increment = std::nullopt);

// ---------------------------------------------------------------------------
// Tensorial superposition
// ---------------------------------------------------------------------------

/// Gradient ∂u_i/∂x_k of the displacement from the reference state to the
/// current one, taken with respect to current coordinates x.
struct DisplacementGradientField {
  Tensor3 du_dx;  // (i, k) -> ∂u_i/∂x_k
};

/// Almansi strain  2e_kl = ∂u_l/∂x_k + ∂u_k/∂x_l - ∂u_i/∂x_k ∂u_i/∂x_l.
/// Throws DomainError when I - ∂u/∂x is singular or reverses orientation.
SymTensor3 almansi_from_displacement(const DisplacementGradientField& g);

/// Default cut-off of the reduced-stress series: stop once the next term's
/// spectral norm drops below this, or after kSeriesMaxTerms terms.
inline constexpr double kSeriesTermTolerance = 1e-14;
inline constexpr int kSeriesMaxTerms = 30;

/// Almansi strain from the reduced stresses through the power series
///   2e = A - A²/2! + A³/3! - ...,   A = σ'_mn + σ' I,
/// truncated adaptively. `deviator` must be traceless.
SymTensor3 strain_from_reduced_stress_series(const SymTensor3& deviator, double mean);
/// Same series with a fixed number of terms (>= 1).
SymTensor3 strain_from_reduced_stress_series(const SymTensor3& deviator, double mean, int terms);
/// Closed form of the series: e = (I - exp(-A)) / 2.
SymTensor3 strain_from_reduced_stress(const SymTensor3& deviator, double mean);

/// Spatial velocity gradient stored as grad(m, n) = ∂v_n/∂x_m, split into the
/// stretching f_mn = ½(∂v_n/∂x_m + ∂v_m/∂x_n) and the spin
/// ω_mn = ½(∂v_n/∂x_m - ∂v_m/∂x_n), so that f + ω = grad.
class VelocityGradient {
 public:
  explicit VelocityGradient(const Tensor3& grad);

  const Tensor3& gradient() const { return grad_; }
  const SymTensor3& stretching() const { return stretching_; }
  const Tensor3& spin() const { return spin_; }
  double divergence() const { return grad_.trace(); }

 private:
  Tensor3 grad_;
  SymTensor3 stretching_;
  Tensor3 spin_;
};

/// Almansi strain rate in the frame following the material element,
///   de/dt = f - f·e - e·f.
SymTensor3 almansi_rate(const SymTensor3& e, const SymTensor3& stretching);
/// One explicit step δe = dt (f - f·e - e·f).
SymTensor3 strain_rate_update(const SymTensor3& e, const SymTensor3& stretching, double dt);

enum class RateScheme { euler, rk4 };

/// Integrates de/dt = f - f·e - e·f over [0, duration] with fixed steps of
/// size `step` (the last step is shortened to land on `duration`). The
/// observer, if given, sees (t, e) at t = 0 and after every step.
SymTensor3 integrate_strain(const SymTensor3& e0, const SymTensor3& stretching, double duration,
                            double step, RateScheme scheme,
                            const std::function<void(double, const SymTensor3&)>& observer = {});

struct ReducedStressRate {
  SymTensor3 deviator_rate;
  double mean_rate = 0;
};

/// Linearised law for small reduced stresses:
///   dσ'/dt = (2/3) ∂v_i/∂x_i
///   dσ'_mn/dt = ∂v_m/∂x_n + ∂v_n/∂x_m - (2/3) g_mn ∂v_i/∂x_i.
/// With `as_printed` the volumetric term enters with "+" instead; the
/// deviatoric rate is then not traceless.
ReducedStressRate linearized_superposition_rate(const VelocityGradient& v, bool as_printed = false);

/// Rate of a symmetric stress field seen from a frame spinning with the
/// material:  δσ/δt = ∂σ/∂t + v_i ∂σ/∂x_i + ω·σ - σ·ω,
/// with ω the spin of VelocityGradient. Vanishes for stress carried along by
/// a rigid rotation. Throws DomainError if ω is not antisymmetric.
SymTensor3 corotational_derivative(const SymTensor3& partial_rate, const SymTensor3& advective,
                                   const SymTensor3& stress, const Tensor3& spin);

}  // namespace hencky
