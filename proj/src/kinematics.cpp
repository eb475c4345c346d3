#include "hencky/kinematics.hpp"

#include <cmath>
#include <sstream>

#include "hencky/errors.hpp"

namespace hencky {

DeformationState DeformationState::from_gradient(const Tensor3& f) {
  DeformationState d;
  d.gradient_ = f;
  d.stretch_ = hencky::left_stretch(f);  // validates det F > 0
  d.principal_ = sym_eigen(d.stretch_);
  d.volume_ratio_ = f.determinant();
  for (std::size_t i = 0; i < 3; ++i) d.log_principal_[i] = std::log(d.principal_.values[i]);
  d.log_strain_ = d.principal_.compose(d.log_principal_);
  return d;
}

DeformationState DeformationState::from_stretches(const Vec3& stretches) {
  for (double s : stretches)
    if (!(s > 0.0) || !std::isfinite(s)) {
      std::ostringstream msg;
      msg << "principal stretch " << s << " must be positive and finite";
      throw DomainError("stretches", msg.str());
    }
  DeformationState d;
  d.gradient_ = Tensor3::diagonal(stretches);
  d.stretch_ = SymTensor3::diagonal(stretches);
  d.principal_.values = stretches;
  d.principal_.vectors = Tensor3::identity();
  d.volume_ratio_ = stretches[0] * stretches[1] * stretches[2];
  for (std::size_t i = 0; i < 3; ++i) d.log_principal_[i] = std::log(stretches[i]);
  d.log_strain_ = SymTensor3::diagonal(d.log_principal_);
  return d;
}

DeformationState DeformationState::from_strain(const StrainState& strain) {
  if (strain.tensor()) {
    const SymTensor3 log_v = *convert_strain(strain, StrainConvention::logarithmic).tensor();
    return from_gradient(exp_sym(log_v).full());
  }
  return from_stretches(strain.stretches());
}

StrainState DeformationState::principal_strain(StrainConvention c) const {
  Vec3 v{};
  for (std::size_t i = 0; i < 3; ++i) v[i] = from_logarithmic(c, log_principal_[i]);
  return StrainState(c, v);
}

}  // namespace hencky
