#include "hencky/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hencky/errors.hpp"

namespace hencky {

namespace {

constexpr int kMaxSweeps = 50;

// One Jacobi rotation annihilating a(p,q). `a` is the full working matrix,
// `v` accumulates the eigenvectors as columns.
void rotate(Tensor3& a, Tensor3& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < 3; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < 3; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymTensor3 EigenSystem::compose(const Vec3& d) const {
  SymTensor3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += vectors(i, k) * d[k] * vectors(j, k);
      r(i, j) = s;
    }
  return r;
}

EigenSystem sym_eigen(const SymTensor3& input) {
  if (!input.is_finite()) throw DomainError("tensor", "non-finite entry in eigenvalue input");

  Tensor3 a = input.full();
  Tensor3 v = Tensor3::identity();
  const double scale = input.norm();

  if (scale > 0.0) {
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      const double off = std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2));
      if (off == 0.0) break;
      // Below this level a rotation changes the diagonal by less than an ulp.
      if (off < 1e-20 * scale) break;
      rotate(a, v, 0, 1);
      rotate(a, v, 0, 2);
      rotate(a, v, 1, 2);
    }
  }

  std::array<std::size_t, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenSystem es;
  for (std::size_t j = 0; j < 3; ++j) {
    es.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < 3; ++i) es.vectors(i, j) = v(i, order[j]);
  }
  if (es.vectors.determinant() < 0.0)
    for (std::size_t i = 0; i < 3; ++i) es.vectors(i, 2) = -es.vectors(i, 2);
  return es;
}

double spectral_norm(const SymTensor3& a) {
  const Vec3 ev = sym_eigen(a).values;
  return std::max(std::abs(ev[0]), std::abs(ev[2]));
}

SymTensor3 left_stretch(const Tensor3& f) {
  if (!f.is_finite()) throw DomainError("deformation_gradient", "non-finite entry");
  const double det = f.determinant();
  if (!(det > 0.0)) {
    std::ostringstream msg;
    msg << "determinant " << det << " is not positive (non-orientation-preserving)";
    throw DomainError("deformation_gradient", msg.str());
  }
  const EigenSystem es = sym_eigen(outer_self(f));
  Vec3 stretch{};
  for (std::size_t j = 0; j < 3; ++j) stretch[j] = std::sqrt(std::max(es.values[j], 0.0));
  return es.compose(stretch);
}

SymTensor3 log_spd(const SymTensor3& v) {
  const EigenSystem es = sym_eigen(v);
  for (double ev : es.values)
    if (!(ev > 0.0)) {
      std::ostringstream msg;
      msg << "eigenvalue " << ev << " is not positive; logarithm undefined";
      throw DomainError("tensor", msg.str());
    }
  return es.compose({std::log(es.values[0]), std::log(es.values[1]), std::log(es.values[2])});
}

SymTensor3 exp_sym(const SymTensor3& h) {
  return spectral_map(h, [](double x) { return std::exp(x); });
}

DevSphSplit dev_sph_split(const SymTensor3& a) {
  DevSphSplit r;
  r.mean = a.trace() / 3.0;
  r.deviator = a;
  const double d0 = a(0, 0) - r.mean;
  const double d1 = a(1, 1) - r.mean;
  r.deviator(0, 0) = d0;
  r.deviator(1, 1) = d1;
  r.deviator(2, 2) = -(d0 + d1);
  return r;
}

}  // namespace hencky
