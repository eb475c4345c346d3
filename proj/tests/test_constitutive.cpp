#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hencky/errors.hpp"
#include "hencky/kinematics.hpp"
#include "hencky/moduli.hpp"
#include "hencky/strain.hpp"
#include "hencky/stress.hpp"

using namespace hencky;
using doctest::Approx;

namespace {

const ElasticModuli kM4 = ElasticModuli::from_contraction_number(1.0, 4.0);

void check_vec(const Vec3& got, const Vec3& want, double tol) {
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

}  // namespace

TEST_CASE("moduli from G and m") {
  CHECK(kM4.k() == Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(kM4.young() == Approx(2.5).epsilon(1e-15));
  CHECK(kM4.bulk() == Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(kM4.lame() == Approx(1.0).epsilon(1e-15));
  CHECK(kM4.poisson_ratio() == 0.25);
  CHECK_FALSE(kM4.near_incompressible());
}

TEST_CASE("m = infinity is the same as nu = 0") {
  const double inf = std::numeric_limits<double>::infinity();
  for (const ElasticModuli& mod : {ElasticModuli::from_contraction_number(1.0, inf), ElasticModuli::from_poisson_ratio(1.0, 0.0)}) {
    CHECK(mod.k() == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(mod.bulk() == Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(mod.young() == 2.0);
    CHECK(mod.lame() == Approx(0.0).epsilon(1e-15));
  }
}

TEST_CASE("near-incompressible flag") {
  const ElasticModuli mod = ElasticModuli::from_contraction_number(1.0, 2.0001);
  CHECK(mod.bulk() > 1e4);
  CHECK(mod.near_incompressible());
  CHECK_FALSE(ElasticModuli::from_contraction_number(1.0, 2.01).near_incompressible());
}

TEST_CASE("moduli domain errors name the parameter") {
  auto parameter_of = [](auto&& fn) {
    try {
      fn();
    } catch (const DomainError& e) {
      return e.parameter();
    }
    return std::string("<none>");
  };
  CHECK(parameter_of([] { ElasticModuli::from_contraction_number(1.0, 2.0); }) == "m");
  CHECK(parameter_of([] { ElasticModuli::from_contraction_number(1.0, 1.5); }) == "m");
  CHECK(parameter_of([] { ElasticModuli::from_contraction_number(-1.0, 4.0); }) == "G");
  CHECK(parameter_of([] { ElasticModuli::from_poisson_ratio(1.0, 0.5); }) == "nu");
  CHECK(parameter_of([] { ElasticModuli::from_poisson_ratio(1.0, -0.1); }) == "nu");
}

TEST_CASE("incompressible moduli") {
  const ElasticModuli mod = ElasticModuli::incompressible(2.0);
  CHECK(mod.is_incompressible());
  CHECK(mod.young() == 6.0);
  CHECK(mod.poisson_ratio() == 0.5);
  CHECK(mod.inverse_bulk() == 0.0);
  CHECK_THROWS_AS(mod.k(), DomainError);
  CHECK_THROWS_AS(mod.bulk(), DomainError);
  CHECK_THROWS_AS(mod.lame(), DomainError);
}

TEST_CASE("strain conventions at a stretch of 2") {
  const double eps = std::log(2.0);
  CHECK(from_logarithmic(StrainConvention::swainger, eps) == Approx(0.5).epsilon(1e-15));
  CHECK(from_logarithmic(StrainConvention::engineering, eps) == Approx(1.0).epsilon(1e-15));
  CHECK(from_logarithmic(StrainConvention::almansi, eps) == Approx(0.375).epsilon(1e-15));
  CHECK(from_logarithmic(StrainConvention::logarithmic, eps) == eps);
}

TEST_CASE("logarithmic 0.1 to Almansi") {
  // 40-digit reference: (1 - exp(-0.2))/2
  CHECK(from_logarithmic(StrainConvention::almansi, 0.1) == Approx(0.09063462346100907521).epsilon(1e-15));
}

TEST_CASE("convert_strain") {
  const StrainState zero(StrainConvention::logarithmic, Vec3{0, 0, 0});
  CHECK(convert_strain(zero, StrainConvention::swainger).principal() == Vec3{0, 0, 0});

  const StrainState e(StrainConvention::engineering, Vec3{1.0, -0.2, 0.3});
  const StrainState back = convert_strain(convert_strain(e, StrainConvention::almansi), StrainConvention::engineering);
  check_vec(back.principal(), e.principal(), 1e-15);
  check_vec(e.stretches(), {2.0, 0.8, 1.3}, 1e-15);

  SUBCASE("tensor input converts spectrally") {
    const SymTensor3 t{0.1, 0.05, -0.02, 0.03, 0.0, 0.01};
    const StrainState s(StrainConvention::logarithmic, t);
    const StrainState a = convert_strain(s, StrainConvention::almansi);
    REQUIRE(a.tensor());
    const SymTensor3 expected = 0.5 * (SymTensor3::identity() - exp_sym(-2.0 * t));
    CHECK((*a.tensor() - expected).norm() < 1e-15);
  }
}

TEST_CASE("strain conventions reject values outside their range") {
  CHECK_THROWS_AS(StrainState(StrainConvention::swainger, Vec3{1.0, 0, 0}), DomainError);
  CHECK_THROWS_AS(StrainState(StrainConvention::almansi, Vec3{0.5, 0, 0}), DomainError);
  CHECK_THROWS_AS(StrainState(StrainConvention::engineering, Vec3{-1.0, 0, 0}), DomainError);
  CHECK_THROWS_AS(to_logarithmic(StrainConvention::swainger, 1.5), DomainError);
  CHECK_NOTHROW(StrainState(StrainConvention::swainger, Vec3{-5.0, 0.99, 0}));
  CHECK(parse_strain_convention("hencky") == StrainConvention::logarithmic);
  CHECK(parse_strain_convention("log") == StrainConvention::logarithmic);
  CHECK_THROWS_AS(parse_strain_convention("green"), DomainError);
}

TEST_CASE("strain round trips are exact to 1e-14") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 0; n < 2000; ++n) {
    const double eps = u(rng);
    for (auto c : {StrainConvention::swainger, StrainConvention::engineering, StrainConvention::almansi}) {
      CHECK(std::abs(to_logarithmic(c, from_logarithmic(c, eps)) - eps) <= 1e-14 * std::max(1.0, std::abs(eps)));
    }
  }
}

TEST_CASE("Hooke's law") {
  const StressState zero = hooke_stress(StrainState(StrainConvention::swainger, Vec3{0, 0, 0}), kM4);
  check_vec(zero.cauchy_principal(), {0, 0, 0}, 0);

  const StressState s = hooke_stress(StrainState(StrainConvention::swainger, Vec3{0.01, 0, 0}), kM4);
  check_vec(s.cauchy_principal(), {0.03, 0.01, 0.01}, 1e-15);

  const double a = 0.003;
  const StressState v = hooke_stress(StrainState(StrainConvention::swainger, Vec3{a, a, a}), kM4);
  for (double si : v.cauchy_principal()) CHECK(si == Approx(2 * 3 * kM4.k() * a).epsilon(1e-14));
  CHECK(v.cauchy_mean() == Approx(2 * kM4.k() * 3 * a).epsilon(1e-14));

  CHECK_THROWS_AS(hooke_stress(StrainState(StrainConvention::almansi, Vec3{0.01, 0, 0}), kM4), DomainError);
  CHECK_THROWS_AS(hooke_stress(StrainState(StrainConvention::swainger, Vec3{0.01, 0, 0}), ElasticModuli::incompressible(1)),
                  DomainError);
}

TEST_CASE("Cauchy stress law") {
  check_vec(cauchy_stress_1928(DeformationState::from_stretches({1, 1, 1}), kM4).cauchy_principal(), {0, 0, 0}, 0);

  const double e = std::numbers::e;
  const StressState u = cauchy_stress_1928(DeformationState::from_stretches({e, e, e}), kM4);
  check_vec(u.cauchy_principal(), {5, 5, 5}, 1e-14);
  CHECK(u.cauchy_mean() == Approx(5).epsilon(1e-15));

  const double r = 1 / std::sqrt(2.0);
  const StressState iso = cauchy_stress_1928(DeformationState::from_stretches({2, r, r}), kM4);
  const double l2 = std::log(2.0);
  check_vec(iso.cauchy_principal(), {2 * l2, -l2, -l2}, 1e-15);
  CHECK(std::abs(iso.cauchy_mean()) < 1e-15);
}

TEST_CASE("Cauchy stress law on a full gradient matches the tensor formula") {
  const Tensor3 f{1.2, 0.3, 0.0, -0.1, 0.9, 0.2, 0.05, 0.0, 1.1};
  const DeformationState d = DeformationState::from_gradient(f);
  const StressState s = cauchy_stress_1928(d, kM4);
  const SymTensor3 log_v = log_spd(left_stretch(f));
  const SymTensor3 expected = 2.0 * log_v + (kM4.lame() * log_v.trace()) * SymTensor3::identity();
  CHECK((s.cauchy() - expected).norm() < 1e-14);
  CHECK(d.volume_ratio() == Approx(f.determinant()).epsilon(1e-14));
}

TEST_CASE("Kirchhoff stress law") {
  const double e = std::numbers::e;
  const StressState u = kirchhoff_stress_1929(DeformationState::from_stretches({e, e, e}), kM4);
  check_vec(u.kirchhoff_principal(), {5, 5, 5}, 1e-14);
  // 5 e^-3
  check_vec(u.cauchy_principal(), {0.24893534183931973, 0.24893534183931973, 0.24893534183931973}, 1e-15);

  const double r = 1 / std::sqrt(2.0);
  const DeformationState iso = DeformationState::from_stretches({2, r, r});
  const StressState a = kirchhoff_stress_1929(iso, kM4);
  const StressState b = cauchy_stress_1928(iso, kM4);
  check_vec(a.cauchy_principal(), b.cauchy_principal(), 1e-15);
  check_vec(a.kirchhoff_principal(), a.cauchy_principal(), 1e-15);

  SUBCASE("T = Δ S") {
    const StressState s = kirchhoff_stress_1929(DeformationState::from_stretches({1.3, 0.7, 1.1}), kM4);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(s.kirchhoff_principal()[i] == Approx(s.volume_ratio() * s.cauchy_principal()[i]).epsilon(1e-15));
  }
}

TEST_CASE("reduced stresses") {
  const StressState s = kirchhoff_stress_1929(DeformationState::from_stretches({1.3, 0.7, 1.1}), kM4);
  const Vec3& t = s.kirchhoff_principal();
  const double t_mean = (t[0] + t[1] + t[2]) / 3;
  for (std::size_t i = 0; i < 3; ++i) CHECK(s.reduced_principal()[i] == Approx((t[i] - t_mean) / kM4.shear()).epsilon(1e-14));
  CHECK(s.reduced_mean() == Approx(2 * t_mean / (3 * kM4.bulk())).epsilon(1e-14));
  // reduced quantities reproduce the logarithmic strain: ε_i - ε̄ = σ'_i/2, ε̄ = σ'/2
  const DeformationState d = DeformationState::from_stretches({1.3, 0.7, 1.1});
  const double eps_mean = d.log_volume() / 3;
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(d.log_principal()[i] - eps_mean == Approx(s.reduced_principal()[i] / 2).epsilon(1e-14));
  CHECK(eps_mean == Approx(s.reduced_mean() / 2).epsilon(1e-14));
}

TEST_CASE("Hencky energy") {
  CHECK(hencky_energy(DeformationState::from_stretches({1, 1, 1}), kM4) == 0.0);
  const double g = 0.3;
  CHECK(hencky_energy(DeformationState::from_stretches({std::exp(g), std::exp(-g), 1}), kM4) ==
        Approx(2 * g * g).epsilon(1e-14));
  const double th = -0.2;
  CHECK(hencky_energy(Vec3{th, th, th}, kM4) == Approx(4.5 * kM4.bulk() * th * th).epsilon(1e-14));
}

TEST_CASE("log strain from Kirchhoff stress inverts the 1929 law") {
  const DeformationState d = DeformationState::from_stretches({1.4, 0.8, 0.95});
  const StressState s = kirchhoff_stress_1929(d, kM4);
  check_vec(log_strain_from_kirchhoff(s.kirchhoff_principal(), kM4), d.log_principal(), 1e-15);
}

TEST_CASE("tension-compression symmetry") {
  const Vec3 lam{1.7, 0.8, 1 / (1.7 * 0.8)};
  const Vec3 inv{1 / lam[0], 1 / lam[1], 1 / lam[2]};
  const StressState a = cauchy_stress_1928(DeformationState::from_stretches(lam), kM4);
  const StressState b = cauchy_stress_1928(DeformationState::from_stretches(inv), kM4);
  for (std::size_t i = 0; i < 3; ++i) CHECK(a.cauchy_principal()[i] == Approx(-b.cauchy_principal()[i]).epsilon(1e-14));
}

TEST_CASE("incompressible laws use the supplied mean stress") {
  const ElasticModuli inc = ElasticModuli::incompressible(1.0);
  const double r = 1 / std::sqrt(2.0);
  const DeformationState iso = DeformationState::from_stretches({2, r, r});
  const StressState s = cauchy_stress_1928(iso, inc, 0.5);
  const double l2 = std::log(2.0);
  check_vec(s.cauchy_principal(), {2 * l2 + 0.5, -l2 + 0.5, -l2 + 0.5}, 1e-15);
  CHECK(s.reduced_mean() == 0.0);

  CHECK_THROWS_AS(cauchy_stress_1928(DeformationState::from_stretches({1.1, 1, 1}), inc), DomainError);
  CHECK_THROWS_AS(kirchhoff_stress_1929(DeformationState::from_stretches({1.1, 1, 1}), inc, 0.0), DomainError);
  CHECK_THROWS_AS(cauchy_stress_1928(iso, kM4, 0.5), DomainError);
}

TEST_CASE("deformation states") {
  CHECK_THROWS_AS(DeformationState::from_stretches({1, 0, 1}), DomainError);
  CHECK_THROWS_AS(DeformationState::from_gradient(Tensor3::diagonal({1, 1, -1})), DomainError);
  const DeformationState d = DeformationState::from_strain(StrainState(StrainConvention::swainger, Vec3{0.5, 0, -1}));
  check_vec(d.stretches(), {2, 1, 0.5}, 1e-15);
  check_vec(d.principal_strain(StrainConvention::almansi).principal(), {0.375, 0, -1.5}, 1e-15);
}
