#include "hencky/stress.hpp"

#include <cmath>
#include <sstream>

#include "hencky/errors.hpp"
#include "hencky/spectral.hpp"

namespace hencky {

StressState StressState::from_kirchhoff(const SymTensor3& kirchhoff, const Vec3& kirchhoff_principal,
                                        double volume_ratio, const ElasticModuli& moduli) {
  StressState s;
  s.volume_ratio_ = volume_ratio;
  s.kirchhoff_ = kirchhoff;
  s.kirchhoff_principal_ = kirchhoff_principal;
  s.cauchy_ = (1.0 / volume_ratio) * kirchhoff;
  for (std::size_t i = 0; i < 3; ++i) s.cauchy_principal_[i] = kirchhoff_principal[i] / volume_ratio;
  s.fill_reduced(moduli);
  return s;
}

StressState StressState::from_cauchy(const SymTensor3& cauchy, const Vec3& cauchy_principal,
                                     double volume_ratio, const ElasticModuli& moduli) {
  StressState s;
  s.volume_ratio_ = volume_ratio;
  s.cauchy_ = cauchy;
  s.cauchy_principal_ = cauchy_principal;
  s.kirchhoff_ = volume_ratio * cauchy;
  for (std::size_t i = 0; i < 3; ++i) s.kirchhoff_principal_[i] = volume_ratio * cauchy_principal[i];
  s.fill_reduced(moduli);
  return s;
}

void StressState::fill_reduced(const ElasticModuli& moduli) {
  const double g = moduli.shear();
  const DevSphSplit split = dev_sph_split(kirchhoff_);
  reduced_deviator_ = (1.0 / g) * split.deviator;

  const double t_mean = mean(kirchhoff_principal_);
  const double d0 = (kirchhoff_principal_[0] - t_mean) / g;
  const double d1 = (kirchhoff_principal_[1] - t_mean) / g;
  reduced_principal_ = {d0, d1, -(d0 + d1)};
  reduced_mean_ = 2.0 * t_mean * moduli.inverse_bulk() / 3.0;
}

namespace {

void check_incompressible(const DeformationState& d) {
  const double tr = d.log_volume();
  if (!(std::abs(tr) <= kIncompressibilityTolerance)) {
    std::ostringstream msg;
    msg << "incompressible material requires tr(log V) = 0, got " << tr;
    throw DomainError("stretches", msg.str());
  }
}

struct LogLaw {
  SymTensor3 tensor;
  Vec3 principal;
};

// 2G log V + Λ tr(log V) I, or 2G dev(log V) + p I when incompressible.
LogLaw evaluate_log_law(const DeformationState& d, const ElasticModuli& moduli,
                        std::optional<double> mean_stress) {
  const double two_g = 2.0 * moduli.shear();
  const Vec3& eps = d.log_principal();
  const double tr = d.log_volume();
  LogLaw r;
  if (moduli.is_incompressible()) {
    check_incompressible(d);
    const double p = mean_stress.value_or(0.0);
    const DevSphSplit split = dev_sph_split(d.log_strain());
    r.tensor = two_g * split.deviator + p * SymTensor3::identity();
    for (std::size_t i = 0; i < 3; ++i) r.principal[i] = two_g * (eps[i] - tr / 3.0) + p;
    return r;
  }
  if (mean_stress) {
    throw DomainError("mean_stress",
                      "the hydrostatic stress is determined by the volume change for a compressible material");
  }
  const double coupling = moduli.volumetric_coupling();
  r.tensor = two_g * d.log_strain() + (two_g * coupling * tr) * SymTensor3::identity();
  for (std::size_t i = 0; i < 3; ++i) r.principal[i] = two_g * (eps[i] + coupling * tr);
  return r;
}

}  // namespace

StressState hooke_stress(const StrainState& swainger, const ElasticModuli& moduli) {
  if (swainger.convention() != StrainConvention::swainger)
    throw DomainError("strain", "Hooke's law takes Swainger strains, got " +
                                    std::string(to_string(swainger.convention())));
  if (moduli.is_incompressible())
    throw DomainError("m", "Hooke's law has no incompressible form here");

  const double two_g = 2.0 * moduli.shear();
  const double c = 3.0 * moduli.k() - 1.0;
  const Vec3& e = swainger.principal();
  const double e_mean = swainger.mean();

  Vec3 s{};
  for (std::size_t i = 0; i < 3; ++i) s[i] = two_g * (e[i] + c * e_mean);
  const SymTensor3 strain = swainger.tensor().value_or(SymTensor3::diagonal(e));
  const SymTensor3 tensor = two_g * strain + (two_g * c * strain.trace() / 3.0) * SymTensor3::identity();
  const double volume_ratio = 1.0 / ((1.0 - e[0]) * (1.0 - e[1]) * (1.0 - e[2]));
  return StressState::from_cauchy(tensor, s, volume_ratio, moduli);
}

StressState cauchy_stress_1928(const DeformationState& d, const ElasticModuli& moduli,
                               std::optional<double> mean_stress) {
  const LogLaw law = evaluate_log_law(d, moduli, mean_stress);
  return StressState::from_cauchy(law.tensor, law.principal, d.volume_ratio(), moduli);
}

StressState kirchhoff_stress_1929(const DeformationState& d, const ElasticModuli& moduli,
                                  std::optional<double> mean_stress) {
  const LogLaw law = evaluate_log_law(d, moduli, mean_stress);
  return StressState::from_kirchhoff(law.tensor, law.principal, d.volume_ratio(), moduli);
}

double hencky_energy(const Vec3& eps, const ElasticModuli& moduli) {
  const double mean = (eps[0] + eps[1] + eps[2]) / 3.0;
  double dev2 = 0;
  for (double e : eps) dev2 += (e - mean) * (e - mean);
  const double shear_part = moduli.shear() * dev2;
  if (moduli.is_incompressible()) return shear_part;
  return shear_part + 4.5 * moduli.bulk() * mean * mean;
}

double hencky_energy(const DeformationState& d, const ElasticModuli& moduli) {
  if (moduli.is_incompressible()) check_incompressible(d);
  return hencky_energy(d.log_principal(), moduli);
}

Vec3 log_strain_from_kirchhoff(const Vec3& t, const ElasticModuli& moduli) {
  const double mean = (t[0] + t[1] + t[2]) / 3.0;
  const double two_g = 2.0 * moduli.shear();
  const double volumetric = mean * moduli.inverse_bulk() / 3.0;
  return {(t[0] - mean) / two_g + volumetric, (t[1] - mean) / two_g + volumetric,
          (t[2] - mean) / two_g + volumetric};
}

}  // namespace hencky
