#pragma once

// Dense 3x3 tensors. Tensor3 stores all nine components row-major;
// SymTensor3 stores the six independent components of a symmetric tensor,
// so symmetry holds by construction.

#include <array>
#include <cmath>
#include <cstddef>

namespace hencky {

using Vec3 = std::array<double, 3>;

class SymTensor3;

class Tensor3 {
 public:
  constexpr Tensor3() = default;
  constexpr Tensor3(double a00, double a01, double a02,  //
                    double a10, double a11, double a12,  //
                    double a20, double a21, double a22)
      : a_{a00, a01, a02, a10, a11, a12, a20, a21, a22} {}

  static constexpr Tensor3 identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }
  static constexpr Tensor3 diagonal(const Vec3& d) {
    return {d[0], 0, 0, 0, d[1], 0, 0, 0, d[2]};
  }

  constexpr double operator()(std::size_t i, std::size_t j) const { return a_[3 * i + j]; }
  constexpr double& operator()(std::size_t i, std::size_t j) { return a_[3 * i + j]; }

  constexpr Tensor3& operator+=(const Tensor3& o) {
    for (std::size_t i = 0; i < 9; ++i) a_[i] += o.a_[i];
    return *this;
  }
  constexpr Tensor3& operator-=(const Tensor3& o) {
    for (std::size_t i = 0; i < 9; ++i) a_[i] -= o.a_[i];
    return *this;
  }
  constexpr Tensor3& operator*=(double s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  constexpr Tensor3 transpose() const {
    const auto& a = *this;
    return {a(0, 0), a(1, 0), a(2, 0), a(0, 1), a(1, 1), a(2, 1), a(0, 2), a(1, 2), a(2, 2)};
  }
  constexpr double trace() const { return a_[0] + a_[4] + a_[8]; }
  constexpr double determinant() const {
    const auto& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  }
  /// Cofactor-based inverse; the caller checks the determinant.
  Tensor3 inverse() const;

  double norm() const {
    double s = 0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }
  bool is_finite() const {
    for (double v : a_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  SymTensor3 symmetric_part() const;
  Tensor3 skew_part() const;

  friend constexpr bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::array<double, 9> a_{};
};

class SymTensor3 {
 public:
  constexpr SymTensor3() = default;
  /// Components in the order xx, yy, zz, xy, yz, xz.
  constexpr SymTensor3(double xx, double yy, double zz, double xy, double yz, double xz)
      : c_{xx, yy, zz, xy, yz, xz} {}

  static constexpr SymTensor3 identity() { return {1, 1, 1, 0, 0, 0}; }
  static constexpr SymTensor3 diagonal(const Vec3& d) { return {d[0], d[1], d[2], 0, 0, 0}; }

  constexpr double operator()(std::size_t i, std::size_t j) const { return c_[index(i, j)]; }
  constexpr double& operator()(std::size_t i, std::size_t j) { return c_[index(i, j)]; }

  constexpr SymTensor3& operator+=(const SymTensor3& o) {
    for (std::size_t i = 0; i < 6; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr SymTensor3& operator-=(const SymTensor3& o) {
    for (std::size_t i = 0; i < 6; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr SymTensor3& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  constexpr double trace() const { return c_[0] + c_[1] + c_[2]; }
  constexpr double determinant() const { return full().determinant(); }
  constexpr Vec3 diagonal_entries() const { return {c_[0], c_[1], c_[2]}; }

  /// Frobenius norm.
  double norm() const {
    double s = c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2];
    s += 2.0 * (c_[3] * c_[3] + c_[4] * c_[4] + c_[5] * c_[5]);
    return std::sqrt(s);
  }
  bool is_finite() const {
    for (double v : c_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  constexpr Tensor3 full() const {
    const auto& a = *this;
    return {a(0, 0), a(0, 1), a(0, 2), a(1, 0), a(1, 1), a(1, 2), a(2, 0), a(2, 1), a(2, 2)};
  }

  friend constexpr bool operator==(const SymTensor3&, const SymTensor3&) = default;

 private:
  static constexpr std::size_t index(std::size_t i, std::size_t j) {
    constexpr std::array<std::size_t, 9> map{0, 3, 5, 3, 1, 4, 5, 4, 2};
    return map[3 * i + j];
  }

  std::array<double, 6> c_{};
};

inline Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
inline Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
inline Tensor3 operator*(double s, Tensor3 a) { return a *= s; }
inline Tensor3 operator-(Tensor3 a) { return a *= -1.0; }

inline SymTensor3 operator+(SymTensor3 a, const SymTensor3& b) { return a += b; }
inline SymTensor3 operator-(SymTensor3 a, const SymTensor3& b) { return a -= b; }
inline SymTensor3 operator*(double s, SymTensor3 a) { return a *= s; }
inline SymTensor3 operator-(SymTensor3 a) { return a *= -1.0; }

Tensor3 operator*(const Tensor3& a, const Tensor3& b);
inline Tensor3 operator*(const SymTensor3& a, const Tensor3& b) { return a.full() * b; }
inline Tensor3 operator*(const Tensor3& a, const SymTensor3& b) { return a * b.full(); }
inline Tensor3 operator*(const SymTensor3& a, const SymTensor3& b) { return a.full() * b.full(); }

Vec3 operator*(const Tensor3& a, const Vec3& v);

/// a·aᵀ, symmetric by construction.
SymTensor3 outer_self(const Tensor3& a);
/// aᵀ·a, symmetric by construction.
SymTensor3 inner_self(const Tensor3& a);
/// a·b·a for symmetric a and b.
SymTensor3 sandwich(const SymTensor3& a, const SymTensor3& b);
/// Symmetric product a·b for commuting or symmetrised use: ½(ab + ba).
SymTensor3 sym_product(const SymTensor3& a, const SymTensor3& b);

/// Double contraction a:b.
double contract(const SymTensor3& a, const SymTensor3& b);

}  // namespace hencky
