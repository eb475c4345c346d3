#pragma once

#include <optional>

#include "hencky/kinematics.hpp"
#include "hencky/moduli.hpp"
#include "hencky/strain.hpp"
#include "hencky/tensor.hpp"

namespace hencky {

/// A stress state carried in all three representations at once:
///   Cauchy S, Kirchhoff T = Δ·S, and the reduced variables
///   σ'_i = (T_i - T̄)/G (deviatoric) and σ' = 2T̄/(3K).
/// Principal values refer to the principal axes of the generating
/// deformation and are listed in the same order.
class StressState {
 public:
  static StressState from_kirchhoff(const SymTensor3& kirchhoff, const Vec3& kirchhoff_principal,
                                    double volume_ratio, const ElasticModuli& moduli);
  static StressState from_cauchy(const SymTensor3& cauchy, const Vec3& cauchy_principal,
                                 double volume_ratio, const ElasticModuli& moduli);

  const SymTensor3& cauchy() const { return cauchy_; }
  const Vec3& cauchy_principal() const { return cauchy_principal_; }
  double cauchy_mean() const { return mean(cauchy_principal_); }

  const SymTensor3& kirchhoff() const { return kirchhoff_; }
  const Vec3& kirchhoff_principal() const { return kirchhoff_principal_; }
  double kirchhoff_mean() const { return mean(kirchhoff_principal_); }

  double volume_ratio() const { return volume_ratio_; }

  const SymTensor3& reduced_deviator() const { return reduced_deviator_; }
  const Vec3& reduced_principal() const { return reduced_principal_; }
  double reduced_mean() const { return reduced_mean_; }

 private:
  StressState() = default;
  static double mean(const Vec3& v) { return (v[0] + v[1] + v[2]) / 3.0; }
  void fill_reduced(const ElasticModuli& moduli);

  SymTensor3 cauchy_;
  Vec3 cauchy_principal_{};
  SymTensor3 kirchhoff_;
  Vec3 kirchhoff_principal_{};
  double volume_ratio_ = 1;
  SymTensor3 reduced_deviator_;
  Vec3 reduced_principal_{};
  double reduced_mean_ = 0;
};

/// Tolerance on |tr log V| for states fed to incompressible laws.
inline constexpr double kIncompressibilityTolerance = 1e-10;

/// Small-strain law S_i = 2G{e_i + (3k-1)e} on Swainger strains.
/// Rejects other conventions and incompressible moduli.
StressState hooke_stress(const StrainState& swainger, const ElasticModuli& moduli);

/// Logarithmic Cauchy-stress law  S = 2G log V + Λ tr(log V) I.
/// `mean_stress` is the hydrostatic stress of an incompressible material and
/// must be omitted otherwise.
StressState cauchy_stress_1928(const DeformationState& d, const ElasticModuli& moduli,
                               std::optional<double> mean_stress = std::nullopt);

/// Logarithmic Kirchhoff-stress law  T = 2G log V + Λ tr(log V) I, S = T/Δ.
StressState kirchhoff_stress_1929(const DeformationState& d, const ElasticModuli& moduli,
                                  std::optional<double> mean_stress = std::nullopt);

/// Quadratic Hencky energy per unit reference volume,
///   A = G Σ(ε_i - ε)² + (9K/2) ε²,  ε the mean logarithmic strain.
double hencky_energy(const DeformationState& d, const ElasticModuli& moduli);
double hencky_energy(const Vec3& log_principal, const ElasticModuli& moduli);

/// Inverse of the Kirchhoff law on principal values.
Vec3 log_strain_from_kirchhoff(const Vec3& kirchhoff_principal, const ElasticModuli& moduli);

}  // namespace hencky
