#pragma once

#include <optional>
#include <string_view>

#include "hencky/tensor.hpp"

namespace hencky {

/// Principal strain measures, each a function of the principal stretch λ:
///   swainger     e = 1 - 1/λ          (e < 1)
///   engineering  e = λ - 1            (e > -1)
///   almansi      e = (1 - 1/λ²)/2     (e < 1/2)
///   logarithmic  ε = ln λ             (unrestricted)
enum class StrainConvention { swainger, engineering, almansi, logarithmic };

std::string_view to_string(StrainConvention c);
StrainConvention parse_strain_convention(std::string_view name);

/// Scalar maps between a convention and the logarithmic strain. Both throw
/// DomainError when the value is outside the convention's range.
double to_logarithmic(StrainConvention from, double value);
double from_logarithmic(StrainConvention to, double log_strain);

class StrainState {
 public:
  /// Principal values in the given convention, validated against its range.
  StrainState(StrainConvention convention, const Vec3& principal);
  /// Full tensor; principal values are its eigenvalues.
  StrainState(StrainConvention convention, const SymTensor3& tensor);

  StrainConvention convention() const { return convention_; }
  const Vec3& principal() const { return principal_; }
  const std::optional<SymTensor3>& tensor() const { return tensor_; }
  double mean() const { return (principal_[0] + principal_[1] + principal_[2]) / 3.0; }
  Vec3 stretches() const;

 private:
  StrainConvention convention_;
  Vec3 principal_;
  std::optional<SymTensor3> tensor_;
};

/// Lossless change of convention; the principal stretches are preserved.
StrainState convert_strain(const StrainState& s, StrainConvention target);

}  // namespace hencky
