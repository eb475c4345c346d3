#pragma once

#include "hencky/moduli.hpp"
#include "hencky/tensor.hpp"

namespace hencky {

/// Long cylindrical rod in uniaxial tension or compression.
///
/// `lambda` is the axial displacement derivative ∂w/∂z̄ taken in the final
/// state (the axial Swainger strain), not a stretch; the axial stretch is
/// 1/(1-λ). The lateral Swainger strain is -x.
struct RodSolution {
  double lambda = 0;
  double lateral_ratio = 0;    // x = (1-λ)^(-1/m) - 1
  double axial_stress = 0;     // S_z = -E ln(1-λ)
  double axial_stretch = 1;    // 1/(1-λ)
  double lateral_stretch = 1;  // 1/(1+x)
  double secant_modulus = 0;   // S_z/λ, E at λ = 0
  double energy = 0;           // per unit reference volume
};

RodSolution rod(double lambda, const ElasticModuli& moduli);

/// Stored energy of the rod at axial stress S_z,
///   A_a = (9K²/E) {1 + e^a (a - 1)},  a = S_z/(3K);  S_z²/(2E) if incompressible.
double rod_energy(double axial_stress, const ElasticModuli& moduli);

/// Thin plate stretched uniformly in its plane with S_z = 0.
/// `x` is the in-plane Swainger strain, `lambda` minus the thickness one.
struct MembraneSolution {
  double x = 0;
  double lambda = 0;             // (1-x)^(-2/(m-1)) - 1
  double inplane_stress = 0;     // S_r = S_φ = -(E m/(m-1)) ln(1-x)
  double inplane_stretch = 1;    // 1/(1-x)
  double thickness_stretch = 1;  // 1/(1+λ)
  double energy = 0;
};

MembraneSolution membrane(double x, const ElasticModuli& moduli);

/// A_a = (E m(m-1)/(2(m-2)²)) {1 + e^b (b - 1)},  b = 2S_r/(3K).
double membrane_energy(double inplane_stress, const ElasticModuli& moduli);

/// Thin spherical rubber balloon inflated from radius R to ρR.
struct BalloonSolution {
  double thickness = 0;          // h
  double radius = 0;             // R
  double ratio = 1;              // ρ = R_x/R
  double current_radius = 0;     // R_x
  double current_thickness = 0;  // h_x = h ρ^(-2/(m-1))
  double membrane_stress = 0;    // S_l = (E m/(m-1)) ln ρ
  double pressure = 0;           // p = 2 S_l h_x / R_x
  bool thin_wall_warning = false;
};

/// h/R above which the thin-wall idealisation is flagged.
inline constexpr double kThinWallLimit = 0.05;

BalloonSolution balloon(double ratio, double thickness, double radius, const ElasticModuli& moduli);

/// Inflation ratio of maximum pressure, ρ* = exp((m-1)/(m+1)).
double balloon_peak_ratio(const ElasticModuli& moduli);

/// 1 + e^a (a - 1), accurate for small |a|.
double energy_shape(double a);

}  // namespace hencky
