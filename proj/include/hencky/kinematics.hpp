#pragma once

#include "hencky/spectral.hpp"
#include "hencky/strain.hpp"
#include "hencky/tensor.hpp"

namespace hencky {

/// Deformation at a material point: F, its left stretch V = sqrt(F Fᵀ), the
/// principal stretches with their axes, the logarithmic strain log V and the
/// volume ratio Δ = det F.
class DeformationState {
 public:
  /// Requires det F > 0. Principal stretches are ordered descending.
  static DeformationState from_gradient(const Tensor3& f);
  /// Coaxial state F = diag(λ) along the coordinate axes; the order of the
  /// stretches is kept so that axis i carries stretch λ_i.
  static DeformationState from_stretches(const Vec3& stretches);
  /// Coaxial state from principal strains of any convention.
  static DeformationState from_strain(const StrainState& strain);

  const Tensor3& gradient() const { return gradient_; }
  const SymTensor3& left_stretch() const { return stretch_; }
  const Vec3& stretches() const { return principal_.values; }
  /// Column j is the principal axis of stretches()[j].
  const Tensor3& axes() const { return principal_.vectors; }
  double volume_ratio() const { return volume_ratio_; }

  /// Logarithmic strain tensor log V and its principal values ln λ_i.
  const SymTensor3& log_strain() const { return log_strain_; }
  const Vec3& log_principal() const { return log_principal_; }
  double log_volume() const { return log_principal_[0] + log_principal_[1] + log_principal_[2]; }

  /// Principal strains in the requested convention.
  StrainState principal_strain(StrainConvention c) const;

 private:
  DeformationState() = default;

  Tensor3 gradient_;
  SymTensor3 stretch_;
  EigenSystem principal_;
  double volume_ratio_ = 1;
  SymTensor3 log_strain_;
  Vec3 log_principal_{};
};

}  // namespace hencky
