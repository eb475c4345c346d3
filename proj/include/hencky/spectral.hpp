#pragma once

#include <utility>

#include "hencky/tensor.hpp"

namespace hencky {

/// Eigenvalues sorted descending; column j of `vectors` is the unit
/// eigenvector for `values[j]`. The basis is orthonormal and right-handed.
struct EigenSystem {
  Vec3 values{};
  Tensor3 vectors = Tensor3::identity();

  Vec3 vector(std::size_t j) const { return {vectors(0, j), vectors(1, j), vectors(2, j)}; }
  /// Q diag(d) Qᵀ in this eigenbasis.
  SymTensor3 compose(const Vec3& d) const;
};

/// Cyclic Jacobi eigensolver. Throws DomainError on non-finite input.
EigenSystem sym_eigen(const SymTensor3& a);

/// Applies a scalar function to the spectrum of a.
template <class F>
SymTensor3 spectral_map(const SymTensor3& a, F&& f) {
  const EigenSystem es = sym_eigen(a);
  return es.compose({f(es.values[0]), f(es.values[1]), f(es.values[2])});
}

/// Largest absolute eigenvalue.
double spectral_norm(const SymTensor3& a);

/// Unique symmetric positive definite V with V² = f·fᵀ. Requires det f > 0.
SymTensor3 left_stretch(const Tensor3& f);

/// Matrix logarithm on the SPD cone; throws naming the offending eigenvalue.
SymTensor3 log_spd(const SymTensor3& v);
SymTensor3 exp_sym(const SymTensor3& h);

struct DevSphSplit {
  SymTensor3 deviator;
  double mean = 0;
};

/// a = deviator + mean·I; the deviator's trace evaluates to exactly zero.
DevSphSplit dev_sph_split(const SymTensor3& a);

}  // namespace hencky
