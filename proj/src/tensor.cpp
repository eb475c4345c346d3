#include "hencky/tensor.hpp"

namespace hencky {

Tensor3 Tensor3::inverse() const {
  const auto& a = *this;
  const double inv_det = 1.0 / determinant();
  Tensor3 r;
  r(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) * inv_det;
  r(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) * inv_det;
  r(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) * inv_det;
  r(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) * inv_det;
  r(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) * inv_det;
  r(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) * inv_det;
  r(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) * inv_det;
  r(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) * inv_det;
  r(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) * inv_det;
  return r;
}

SymTensor3 Tensor3::symmetric_part() const {
  const auto& a = *this;
  return {a(0, 0),
          a(1, 1),
          a(2, 2),
          0.5 * (a(0, 1) + a(1, 0)),
          0.5 * (a(1, 2) + a(2, 1)),
          0.5 * (a(0, 2) + a(2, 0))};
}

Tensor3 Tensor3::skew_part() const {
  Tensor3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = 0.5 * ((*this)(i, j) - (*this)(j, i));
  return r;
}

Tensor3 operator*(const Tensor3& a, const Tensor3& b) {
  Tensor3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Vec3 operator*(const Tensor3& a, const Vec3& v) {
  Vec3 r{};
  for (std::size_t i = 0; i < 3; ++i) r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
  return r;
}

SymTensor3 outer_self(const Tensor3& a) {
  SymTensor3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j)
      r(i, j) = a(i, 0) * a(j, 0) + a(i, 1) * a(j, 1) + a(i, 2) * a(j, 2);
  return r;
}

SymTensor3 inner_self(const Tensor3& a) { return outer_self(a.transpose()); }

SymTensor3 sandwich(const SymTensor3& a, const SymTensor3& b) {
  return (a * b * a).symmetric_part();
}

SymTensor3 sym_product(const SymTensor3& a, const SymTensor3& b) {
  const Tensor3 ab = a * b;
  return ab.symmetric_part();
}

double contract(const SymTensor3& a, const SymTensor3& b) {
  double s = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s += a(i, j) * b(i, j);
  return s;
}

}  // namespace hencky
