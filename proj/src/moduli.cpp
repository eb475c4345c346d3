#include "hencky/moduli.hpp"

#include <cmath>
#include <sstream>

#include "hencky/errors.hpp"

namespace hencky {

namespace {

void require_shear(double shear) {
  if (!(shear > 0.0) || !std::isfinite(shear)) {
    std::ostringstream msg;
    msg << "shear modulus must be positive and finite, got " << shear;
    throw DomainError("G", msg.str());
  }
}

}  // namespace

ElasticModuli ElasticModuli::from_contraction_number(double shear, double m) {
  if (std::isnan(m) || !(m > 2.0)) {
    std::ostringstream msg;
    msg << "lateral contraction number must exceed 2 (got " << m
        << "); use the incompressible flag for the limit m -> 2";
    throw DomainError("m", msg.str());
  }
  return from_poisson_ratio(shear, std::isinf(m) ? 0.0 : 1.0 / m);
}

ElasticModuli ElasticModuli::from_poisson_ratio(double shear, double nu) {
  require_shear(shear);
  if (std::isnan(nu) || nu < 0.0 || !(nu < 0.5)) {
    std::ostringstream msg;
    msg << "Poisson ratio must lie in [0, 1/2), got " << nu;
    throw DomainError("nu", msg.str());
  }
  ElasticModuli r;
  r.shear_ = shear;
  r.nu_ = nu;
  r.m_ = nu == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / nu;
  r.k_ = (1.0 + nu) / (3.0 * (1.0 - 2.0 * nu));
  r.bulk_ = 2.0 * shear * r.k_;
  r.young_ = 2.0 * shear * (1.0 + nu);
  r.lame_ = r.bulk_ - 2.0 * shear / 3.0;
  return r;
}

ElasticModuli ElasticModuli::incompressible(double shear) {
  require_shear(shear);
  ElasticModuli r;
  r.shear_ = shear;
  r.nu_ = 0.5;
  r.m_ = 2.0;
  r.young_ = 3.0 * shear;
  r.incompressible_ = true;
  return r;
}

bool ElasticModuli::near_incompressible() const {
  return incompressible_ || bulk_ / shear_ > kNearIncompressibleRatio;
}

double ElasticModuli::k() const {
  if (incompressible_) throw DomainError("k", "undefined for an incompressible material");
  return k_;
}

double ElasticModuli::bulk() const {
  if (incompressible_) throw DomainError("K", "bulk modulus is unbounded for an incompressible material");
  return bulk_;
}

double ElasticModuli::lame() const {
  if (incompressible_) throw DomainError("Lambda", "undefined for an incompressible material");
  return lame_;
}

double ElasticModuli::volumetric_coupling() const {
  if (incompressible_)
    throw DomainError("k", "volumetric coupling is unbounded for an incompressible material");
  // k - 1/3 = nu / (1 - 2 nu) = 1/(m-2)
  return nu_ / (1.0 - 2.0 * nu_);
}

}  // namespace hencky
