#pragma once

#include <limits>

namespace hencky {

/// Isotropic elastic constants in the lateral-contraction-number notation:
///   k = (m+1)/(3(m-2)),  E = 2G(1+1/m),  K = 2Gk,  3K = Em/(m-2),  Λ = K - 2G/3.
///
/// m = +inf (Poisson ratio 0) is represented exactly through nu = 1/m = 0.
/// The incompressible limit m -> 2 is a flag: K, k and Λ are then unavailable
/// and volumetric terms are replaced by the constraint tr(log V) = 0.
class ElasticModuli {
 public:
  /// Shear modulus G and lateral contraction number m (m > 2, may be +inf).
  static ElasticModuli from_contraction_number(double shear, double m);
  /// Shear modulus G and Poisson ratio nu in [0, 1/2).
  static ElasticModuli from_poisson_ratio(double shear, double nu);
  static ElasticModuli incompressible(double shear);

  /// Ratio K/G above which the volumetric term is flagged as ill-conditioned.
  static constexpr double kNearIncompressibleRatio = 1e4;

  double shear() const { return shear_; }
  double contraction_number() const { return m_; }
  double poisson_ratio() const { return nu_; }
  double young() const { return young_; }
  bool is_incompressible() const { return incompressible_; }
  bool near_incompressible() const;

  /// The following throw DomainError in incompressible mode.
  double k() const;
  double bulk() const;
  double lame() const;

  /// 1/K, zero in incompressible mode.
  double inverse_bulk() const { return incompressible_ ? 0.0 : 1.0 / bulk_; }
  /// Coefficient k - 1/3 = Λ/(2G) of the volumetric strain in the principal laws.
  double volumetric_coupling() const;

 private:
  ElasticModuli() = default;

  double shear_ = 0;
  double m_ = std::numeric_limits<double>::infinity();
  double nu_ = 0;
  double k_ = 0;
  double bulk_ = 0;
  double young_ = 0;
  double lame_ = 0;
  bool incompressible_ = false;
};

}  // namespace hencky
