#include "hencky/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hencky/analytic.hpp"
#include "hencky/kinematics.hpp"
#include "hencky/moduli.hpp"
#include "hencky/quadrature.hpp"
#include "hencky/spectral.hpp"
#include "hencky/strain.hpp"
#include "hencky/stress.hpp"
#include "hencky/superposition.hpp"
#include "hencky/work.hpp"

namespace hencky {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

// Work gap between hydrostatic-first and deviatoric-first loading to
// (2, 0, 1) for G = 1, m = 4; 40-digit quadrature reference.
constexpr double kCanonicalCauchyGap = 0.41105940019525448744;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Vec3 uniform3(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }

  Vec3 unit_vector() {
    std::normal_distribution<double> n;
    Vec3 v{n(rng_), n(rng_), n(rng_)};
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / len, v[1] / len, v[2] / len};
  }

  Tensor3 rotation() { return rotation_about(unit_vector(), uniform(-std::numbers::pi, std::numbers::pi)); }

  static Tensor3 rotation_about(const Vec3& n, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Tensor3 r;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r(i, j) = (i == j ? c : 0.0) + (1.0 - c) * n[i] * n[j];
    r(0, 1) -= s * n[2];
    r(1, 0) += s * n[2];
    r(0, 2) += s * n[1];
    r(2, 0) -= s * n[1];
    r(1, 2) -= s * n[0];
    r(2, 1) += s * n[0];
    return r;
  }

  SymTensor3 rotated_diagonal(const Vec3& d) {
    const Tensor3 q = rotation();
    return (q * Tensor3::diagonal(d) * q.transpose()).symmetric_part();
  }

  SymTensor3 symmetric(double scale) {
    return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
            uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)};
  }

 private:
  std::mt19937_64 rng_;
};

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

class Suite {
 public:
  explicit Suite(VerifyReport& report) : report_(report) {}

  void at_most(std::string name, double measured, double bound) {
    report_.checks.push_back({std::move(name), measured, bound, measured <= bound});
  }
  void at_least(std::string name, double measured, double bound) {
    report_.checks.push_back({std::move(name), measured, bound, measured >= bound});
  }

 private:
  VerifyReport& report_;
};

void check_tensor_core(Suite& suite, Sampler& rng) {
  double recon = 0;
  double ortho = 0;
  double exp_log = 0;
  for (int n = 0; n < 1000; ++n) {
    const Vec3 spectrum{std::exp(rng.uniform(-6.9, 6.9)), std::exp(rng.uniform(-6.9, 6.9)),
                        std::exp(rng.uniform(-6.9, 6.9))};
    const SymTensor3 a = rng.rotated_diagonal(spectrum);
    const EigenSystem es = sym_eigen(a);
    recon = std::max(recon, (es.compose(es.values) - a).norm() / a.norm());
    const Tensor3 qtq = es.vectors.transpose() * es.vectors;
    ortho = std::max(ortho, (qtq - Tensor3::identity()).norm());
    exp_log = std::max(exp_log, (exp_sym(log_spd(a)) - a).norm() / a.norm());
  }
  suite.at_most("eigen reconstruction (1000 SPD)", recon, 1e-12);
  suite.at_most("eigen orthonormality (1000 SPD)", ortho, 1e-12);
  suite.at_most("exp(log(V)) round trip (1000 SPD, cond <= 1e6)", exp_log, 1e-12);

  double det_err = 0;
  for (int n = 0; n < 200; ++n) {
    const SymTensor3 u = rng.rotated_diagonal(rng.uniform3(0.2, 5.0));
    const Tensor3 f = rng.rotation() * u.full();
    det_err = std::max(det_err, rel_diff(left_stretch(f).determinant(), f.determinant()));
  }
  suite.at_most("left stretch preserves det F", det_err, 1e-12);
}

void check_constitutive(Suite& suite, Sampler& rng) {
  double ident = 0;
  for (double m : {2.5, 3.0, 4.0, 10.0, 1e3}) {
    const ElasticModuli mod = ElasticModuli::from_contraction_number(1.0, m);
    ident = std::max({ident, rel_diff(mod.k(), (m + 1) / (3 * (m - 2))),
                      rel_diff(mod.young(), 2 * (1 + 1 / m)),
                      rel_diff(3 * mod.bulk(), mod.young() * m / (m - 2)),
                      rel_diff(mod.bulk(), 2 * mod.k())});
  }
  suite.at_most("moduli identities", ident, 1e-14);

  double round_trip = 0;
  constexpr StrainConvention all[] = {StrainConvention::swainger, StrainConvention::engineering,
                                      StrainConvention::almansi, StrainConvention::logarithmic};
  for (int n = 0; n < 1000; ++n) {
    const double eps = rng.uniform(-2.0, 2.0);
    for (StrainConvention c : all) {
      const double back = to_logarithmic(c, from_logarithmic(c, eps));
      round_trip = std::max(round_trip, std::abs(back - eps) / std::max(1.0, std::abs(eps)));
    }
  }
  suite.at_most("strain convention round trips", round_trip, 1e-14);

  const ElasticModuli mod = ElasticModuli::from_contraction_number(1.0, 4.0);
  double hooke_1928 = 0;
  double hooke_1929 = 0;
  for (int n = 0; n < 1000; ++n) {
    const Vec3 lambda{1 + rng.uniform(-1e-6, 1e-6), 1 + rng.uniform(-1e-6, 1e-6),
                      1 + rng.uniform(-1e-6, 1e-6)};
    const DeformationState d = DeformationState::from_stretches(lambda);
    const StressState h = hooke_stress(d.principal_strain(StrainConvention::swainger), mod);
    const StressState c = cauchy_stress_1928(d, mod);
    const StressState k = kirchhoff_stress_1929(d, mod);
    for (std::size_t i = 0; i < 3; ++i) {
      hooke_1928 = std::max(hooke_1928, std::abs(c.cauchy_principal()[i] - h.cauchy_principal()[i]));
      hooke_1929 = std::max(hooke_1929, std::abs(k.cauchy_principal()[i] - h.cauchy_principal()[i]));
    }
  }
  suite.at_most("Hooke recovery, Cauchy law (|lambda-1| <= 1e-6)", hooke_1928, 1e-11);
  suite.at_most("Hooke recovery, Kirchhoff law (|lambda-1| <= 1e-6)", hooke_1929, 1e-11);

  double grad = 0;
  constexpr double h = 1e-5;
  for (int n = 0; n < 100; ++n) {
    const Vec3 eps = rng.uniform3(-1.0, 1.0);
    Vec3 stretch{};
    for (std::size_t i = 0; i < 3; ++i) stretch[i] = std::exp(eps[i]);
    const StressState t = kirchhoff_stress_1929(DeformationState::from_stretches(stretch), mod);
    for (std::size_t i = 0; i < 3; ++i) {
      Vec3 up = eps, down = eps;
      up[i] += h;
      down[i] -= h;
      const double fd = (hencky_energy(up, mod) - hencky_energy(down, mod)) / (2 * h);
      const double ti = t.kirchhoff_principal()[i];
      grad = std::max(grad, std::abs(fd - ti) / (mod.shear() * std::max(1.0, std::abs(ti))));
    }
  }
  suite.at_most("energy gradient equals Kirchhoff stress (100 states)", grad, 1e-8);

  double iso = 0;
  double hydro = 0;
  for (int n = 0; n < 200; ++n) {
    const Tensor3 f = rng.rotation() * rng.rotated_diagonal(rng.uniform3(0.3, 3.0)).full();
    const DeformationState d = DeformationState::from_gradient(f);
    const DeformationState qd = DeformationState::from_gradient(rng.rotation() * f);
    const StressState s = cauchy_stress_1928(d, mod);
    const StressState qs = cauchy_stress_1928(qd, mod);
    const StressState t = kirchhoff_stress_1929(d, mod);
    const StressState qt = kirchhoff_stress_1929(qd, mod);
    for (std::size_t i = 0; i < 3; ++i) {
      iso = std::max(iso, std::abs(s.cauchy_principal()[i] - qs.cauchy_principal()[i]));
      iso = std::max(iso, std::abs(t.kirchhoff_principal()[i] - qt.kirchhoff_principal()[i]));
    }
    iso = std::max(iso, std::abs(hencky_energy(d, mod) - hencky_energy(qd, mod)));
    hydro = std::max(hydro, std::abs(s.cauchy_mean() - 2 * mod.shear() * mod.k() * std::log(d.volume_ratio())));
  }
  suite.at_most("isotropy of stress laws and energy", iso, 1e-12);
  suite.at_most("hydrostatic part 2Gk ln(det F)", hydro, 1e-12);
}

void check_superposition(Suite& suite, Sampler& rng) {
  const ElasticModuli mod = ElasticModuli::from_contraction_number(1.0, 4.0);
  double determinacy = 0;
  for (int n = 0; n < 1000; ++n) {
    const Vec3 e = rng.uniform3(-1.0, 0.6);
    const Vec3 de = rng.uniform3(-1.0, 0.6);
    const Vec3 composed = compose_coaxial(e, de);
    const auto stress_of = [&](const Vec3& sw) {
      return cauchy_stress_1928(DeformationState::from_strain(StrainState(StrainConvention::swainger, sw)), mod)
          .cauchy_principal();
    };
    const Vec3 before = stress_of(e);
    const Vec3 after = stress_of(composed);
    const Vec3 inc = stress_increment_coaxial(de, mod).stress_increment;
    for (std::size_t i = 0; i < 3; ++i)
      determinacy = std::max(determinacy, std::abs(after[i] - before[i] - inc[i]));
  }
  suite.at_most("coaxial elastic determinacy (1000 pairs)", determinacy, 1e-12);

  double series = 0;
  for (int n = 0; n < 500; ++n) {
    const DevSphSplit split = dev_sph_split(rng.symmetric(1.0));
    const double mean = rng.uniform(-1.0, 1.0);
    SymTensor3 arg = split.deviator + mean * SymTensor3::identity();
    const double scale = rng.uniform(0.0, 1.0) / spectral_norm(arg);
    const SymTensor3 dev = scale * split.deviator;
    const double m = scale * mean;
    series = std::max(series, spectral_norm(strain_from_reduced_stress_series(dev, m) -
                                            strain_from_reduced_stress(dev, m)));
  }
  suite.at_most("reduced-stress series vs closed form (500, norm <= 1)", series, 1e-12);

  // Uniaxial constant stretching f = diag(a, 0, 0): e11(t) = (1 - exp(-2at))/2.
  const double a = 1.0;
  const SymTensor3 f = SymTensor3::diagonal({a, 0, 0});
  const double exact = -0.5 * std::expm1(-2.0 * a);
  const auto error_at = [&](double dt) {
    return std::abs(integrate_strain({}, f, 1.0 / a, dt, RateScheme::rk4)(0, 0) - exact);
  };
  suite.at_most("RK4 strain update vs exact (dt = 1e-3/a)", error_at(1e-3 / a), 1e-10);
  const double e1 = error_at(0.1 / a);
  const double e2 = error_at(0.05 / a);
  const double e3 = error_at(0.025 / a);
  suite.at_least("RK4 observed order under step halving", std::min(std::log2(e1 / e2), std::log2(e2 / e3)), 3.9);

  double objectivity = 0;
  for (int n = 0; n < 20; ++n) {
    const Vec3 axis = rng.unit_vector();
    const double w = rng.uniform(-3.0, 3.0);
    const double t = rng.uniform(0.0, 2.0);
    const SymTensor3 sigma0 = rng.symmetric(0.5);
    const SymTensor3 sigma1 = rng.symmetric(0.5);
    const Vec3 x = rng.uniform3(-1.0, 1.0);

    // Body spin W (W x = w n × x); grad(m,n) = ∂v_n/∂x_m = W(n,m).
    Tensor3 spin_w;
    spin_w(0, 1) = -w * axis[2];
    spin_w(1, 0) = w * axis[2];
    spin_w(0, 2) = w * axis[1];
    spin_w(2, 0) = -w * axis[1];
    spin_w(1, 2) = -w * axis[0];
    spin_w(2, 1) = w * axis[0];
    const VelocityGradient vg(spin_w.transpose());
    const Tensor3 r = Sampler::rotation_about(axis, w * t);

    // Material field Σ(X) = Σ0 + X_1 Σ1 carried by the rotation:
    // σ(x, t) = R Σ(Rᵀx) Rᵀ.
    const Vec3 x_ref = r.transpose() * x;
    const SymTensor3 field = sigma0 + x_ref[0] * sigma1;
    const SymTensor3 sigma = (r * field * r.transpose()).symmetric_part();
    const Vec3 v = spin_w * x;
    const Vec3 x_ref_rate = (r.transpose() * spin_w.transpose()) * x;  // d(Rᵀx)/dt at fixed x
    const SymTensor3 rotated1 = (r * sigma1 * r.transpose()).symmetric_part();
    const Tensor3 ws = spin_w * sigma;
    const SymTensor3 rigid = (ws - sigma.full() * spin_w).symmetric_part();
    const SymTensor3 partial = rigid + x_ref_rate[0] * rotated1;
    const Vec3 v_ref = r.transpose() * v;
    const SymTensor3 advective = v_ref[0] * rotated1;
    const SymTensor3 out = corotational_derivative(partial, advective, sigma, vg.spin());
    objectivity = std::max(objectivity, out.norm());
  }
  suite.at_most("corotational derivative of rigidly rotating stress (20 spins)", objectivity, 1e-12);

  double traceless = 0;
  for (int n = 0; n < 100; ++n) {
    Tensor3 g;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) g(i, j) = rng.uniform(-1.0, 1.0);
    traceless = std::max(traceless, std::abs(linearized_superposition_rate(VelocityGradient(g)).deviator_rate.trace()));
  }
  suite.at_most("linearized deviatoric rate is traceless", traceless, 1e-14);
}

void check_analytic(Suite& suite) {
  const ElasticModuli mod = ElasticModuli::from_contraction_number(1.0, 4.0);
  const RodSolution half = rod(0.5, mod);
  suite.at_most("rod secant modulus ratio at lambda = 1/2 vs 1.4",
                std::abs(half.secant_modulus / mod.young() - 1.4), 0.02);

  double rod_oracle = 0;
  for (int n = 0; n < 200; ++n) {
    const double lambda = -3.0 + (0.95 + 3.0) * (n + 0.5) / 200.0;
    const RodSolution r = rod(lambda, mod);
    const DeformationState d =
        DeformationState::from_stretches({r.lateral_stretch, r.lateral_stretch, r.axial_stretch});
    const Vec3 s = cauchy_stress_1928(d, mod).cauchy_principal();
    rod_oracle = std::max({rod_oracle, std::abs(s[0]), std::abs(s[1]), std::abs(s[2] - r.axial_stress)});
  }
  suite.at_most("rod closed form vs tensorial Cauchy law (200 lambda)", rod_oracle / mod.shear(), 1e-12);

  double rod_quad = 0;
  const double three_k = 3.0 * mod.bulk();
  for (int n = 0; n <= 20; ++n) {
    const double a = -1.0 + 0.1 * n;
    if (a == 0.0) continue;
    const double sz = a * three_k;
    const StressPath path = StressPath::through({{0, 0, sz}});
    const double quad = work_along_path(path, mod).energy_reference;
    rod_quad = std::max(rod_quad, rel_diff(rod_energy(sz, mod), quad));
  }
  suite.at_most("rod energy vs work quadrature (S/3K in [-1, 1])", rod_quad, 1e-8);
  const ElasticModuli incompressible = ElasticModuli::incompressible(1.0);
  suite.at_most("rod energy incompressible limit", std::abs(rod_energy(0.7, incompressible) - 0.49 / 6.0), 1e-10);

  double membrane_oracle = 0;
  for (int n = 0; n < 100; ++n) {
    const double x = -2.0 + 2.9 * (n + 0.5) / 100.0;
    const MembraneSolution m = membrane(x, mod);
    const Vec3 s = cauchy_stress_1928(
                       DeformationState::from_stretches({m.inplane_stretch, m.inplane_stretch, m.thickness_stretch}),
                       mod)
                       .cauchy_principal();
    membrane_oracle =
        std::max({membrane_oracle, std::abs(s[2]), std::abs(s[0] - m.inplane_stress), std::abs(s[1] - m.inplane_stress)});
  }
  suite.at_most("membrane closed form vs tensorial Cauchy law", membrane_oracle, 1e-12);

  double peak = 0;
  for (double m : {3.0, 4.0, 6.0, 10.0}) {
    const ElasticModuli mm = ElasticModuli::from_contraction_number(1.0, m);
    const Extremum best = golden_section_maximize(
        [&](double rho) { return balloon(rho, 0.01, 1.0, mm).pressure; }, 1.0, 5.0, 1e-10);
    peak = std::max(peak, std::abs(best.location - balloon_peak_ratio(mm)));
  }
  suite.at_most("balloon pressure peak vs golden section (m = 3, 4, 6, 10)", peak, 1e-6);
}

void check_work(Suite& suite, Sampler& rng) {
  const ElasticModuli mod = ElasticModuli::from_contraction_number(1.0, 4.0);
  double kirchhoff_gap = 0;
  double energy_match = 0;
  for (int n = 0; n < 50; ++n) {
    const Vec3 end = rng.uniform3(-1.0, 1.0);
    const StressPath a = StressPath::through({rng.uniform3(-1.0, 1.0), end});
    const StressPath b = StressPath::through({rng.uniform3(-1.0, 1.0), rng.uniform3(-1.0, 1.0), end});
    kirchhoff_gap = std::max(kirchhoff_gap, std::abs(path_dependence_gap(a, b, mod, WorkMeasure::kirchhoff)));
    energy_match = std::max(energy_match, std::abs(kirchhoff_work_along_path(a, mod) -
                                                   hencky_energy(log_strain_from_kirchhoff(end, mod), mod)));
  }
  suite.at_most("Kirchhoff work path independence (50 pairs)", kirchhoff_gap / mod.shear(), 1e-9);
  suite.at_most("Kirchhoff work equals Hencky energy", energy_match / mod.shear(), 1e-9);

  const StressPath hydro_first = StressPath::through({{1, 1, 1}, {2, 0, 1}});
  const StressPath dev_first = StressPath::through({{1, -1, 0}, {2, 0, 1}});
  const double gap = path_dependence_gap(hydro_first, dev_first, mod);
  suite.at_least("Cauchy work gap, hydrostatic vs deviatoric first", std::abs(gap) / mod.shear(), 1e-3);
  suite.at_most("Cauchy work gap vs pinned reference (relative)", rel_diff(gap, kCanonicalCauchyGap), 1e-6);

  const WorkResult w = work_along_path(hydro_first, mod);
  suite.at_most("A_e = exp(-S/K) A_a", std::abs(w.energy_current - std::exp(-1.0 / mod.bulk()) * w.energy_reference), 1e-12);
}

}  // namespace

VerifyReport run_verification(std::uint64_t seed) {
  VerifyReport report;
  report.seed = seed;
  Suite suite(report);
  Sampler rng(seed);
  check_tensor_core(suite, rng);
  check_constitutive(suite, rng);
  check_superposition(suite, rng);
  check_analytic(suite);
  check_work(suite, rng);
  return report;
}

}  // namespace hencky
