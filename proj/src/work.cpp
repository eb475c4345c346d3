#include "hencky/work.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hencky/errors.hpp"
#include "hencky/stress.hpp"

namespace hencky {

StressPath::StressPath(std::vector<PathSample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2) throw DomainError("path", "needs at least two samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const PathSample& s = samples_[i];
    if (!(s.t >= 0.0 && s.t <= 1.0)) {
      std::ostringstream msg;
      msg << "sample " << i << ": t = " << s.t << " outside [0, 1]";
      throw DomainError("path", msg.str());
    }
    if (i > 0 && !(s.t > samples_[i - 1].t)) {
      std::ostringstream msg;
      msg << "sample " << i << ": t must be strictly increasing";
      throw DomainError("path", msg.str());
    }
    for (double v : s.stress)
      if (!std::isfinite(v)) throw DomainError("path", "non-finite stress in sample " + std::to_string(i));
  }
  for (double v : samples_.front().stress)
    if (v != 0.0) throw DomainError("path", "must start from the unloaded state (0, 0, 0)");
}

StressPath StressPath::through(const std::vector<Vec3>& corners) {
  std::vector<PathSample> samples;
  samples.push_back({0.0, {0, 0, 0}});
  for (std::size_t i = 0; i < corners.size(); ++i)
    samples.push_back({static_cast<double>(i + 1) / static_cast<double>(corners.size()), corners[i]});
  return StressPath(std::move(samples));
}

StressPath read_stress_path(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("path", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw DomainError("path", "expected a JSON array of samples");
  std::vector<PathSample> samples;
  for (const auto& rec : doc) {
    try {
      samples.push_back({rec.at("t").get<double>(),
                         {rec.at("S1").get<double>(), rec.at("S2").get<double>(),
                          rec.at("S3").get<double>()}});
    } catch (const nlohmann::json::exception& e) {
      throw DomainError("path", std::string("bad sample record: ") + e.what());
    }
  }
  return StressPath(std::move(samples));
}

StressPath read_stress_path_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw DomainError("path", "cannot open '" + filename + "'");
  return read_stress_path(in);
}

void write_stress_path(std::ostream& out, const StressPath& path) {
  nlohmann::json doc = nlohmann::json::array();
  for (const PathSample& s : path.samples())
    doc.push_back({{"t", s.t}, {"S1", s.stress[0]}, {"S2", s.stress[1]}, {"S3", s.stress[2]}});
  out << doc.dump(1) << '\n';
}

StressPath stress_path_from_log_strains(const std::vector<PathSample>& strains,
                                        const ElasticModuli& moduli) {
  if (moduli.is_incompressible())
    throw DomainError("m", "strain paths do not determine the stress of an incompressible material");
  const double two_g = 2.0 * moduli.shear();
  const double coupling = moduli.volumetric_coupling();
  std::vector<PathSample> stresses;
  stresses.reserve(strains.size());
  for (const PathSample& s : strains) {
    const double tr = s.stress[0] + s.stress[1] + s.stress[2];
    PathSample out{s.t, {}};
    for (std::size_t i = 0; i < 3; ++i) out.stress[i] = two_g * (s.stress[i] + coupling * tr);
    stresses.push_back(out);
  }
  return StressPath(std::move(stresses));
}

double j_invariant(const Vec3& s, const ElasticModuli& moduli) {
  const double nu = moduli.poisson_ratio();
  return s[0] * s[0] + s[1] * s[1] + s[2] * s[2] -
         2.0 * nu * (s[0] * s[1] + s[2] * s[0] + s[1] * s[2]);
}

Vec3 j_gradient(const Vec3& s, const ElasticModuli& moduli) {
  const double nu = moduli.poisson_ratio();
  return {2.0 * s[0] - 2.0 * nu * (s[1] + s[2]), 2.0 * s[1] - 2.0 * nu * (s[2] + s[0]),
          2.0 * s[2] - 2.0 * nu * (s[0] + s[1])};
}

namespace {

Vec3 lerp(const Vec3& a, const Vec3& b, double tau) {
  return {a[0] + tau * (b[0] - a[0]), a[1] + tau * (b[1] - a[1]), a[2] + tau * (b[2] - a[2])};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

WorkResult work_along_path(const StressPath& path, const ElasticModuli& moduli,
                           const QuadratureOptions& options) {
  const double inv_k = moduli.inverse_bulk();
  const double inv_2e = 1.0 / (2.0 * moduli.young());
  const auto& samples = path.samples();

  WorkResult r;
  r.j.push_back(j_invariant(samples.front().stress, moduli));
  r.cumulative_reference.push_back(0.0);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const Vec3& a = samples[i - 1].stress;
    const Vec3& b = samples[i].stress;
    const Vec3 ds{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    // Integrand in the local segment parameter τ: exp(S/K) (∇J · dS/dτ).
    auto integrand = [&](double tau) {
      const Vec3 s = lerp(a, b, tau);
      const double mean = (s[0] + s[1] + s[2]) / 3.0;
      return std::exp(mean * inv_k) * dot(j_gradient(s, moduli), ds);
    };
    const QuadratureResult q = adaptive_simpson(integrand, 0.0, 1.0, options);
    r.energy_reference += inv_2e * q.value;
    r.error_estimate += inv_2e * q.error;
    r.j.push_back(j_invariant(b, moduli));
    r.cumulative_reference.push_back(r.energy_reference);
  }
  const Vec3& end = path.endpoint();
  const double end_mean = (end[0] + end[1] + end[2]) / 3.0;
  r.energy_current = std::exp(-end_mean * inv_k) * r.energy_reference;
  return r;
}

double kirchhoff_work_along_path(const StressPath& path, const ElasticModuli& moduli,
                                 const QuadratureOptions& options) {
  const auto& samples = path.samples();
  double total = 0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const Vec3& a = samples[i - 1].stress;
    const Vec3& b = samples[i].stress;
    const Vec3 ea = log_strain_from_kirchhoff(a, moduli);
    const Vec3 eb = log_strain_from_kirchhoff(b, moduli);
    const Vec3 de{eb[0] - ea[0], eb[1] - ea[1], eb[2] - ea[2]};
    auto integrand = [&](double tau) { return dot(lerp(a, b, tau), de); };
    total += adaptive_simpson(integrand, 0.0, 1.0, options).value;
  }
  return total;
}

double path_dependence_gap(const StressPath& a, const StressPath& b, const ElasticModuli& moduli,
                           WorkMeasure measure, const QuadratureOptions& options) {
  const Vec3& ea = a.endpoint();
  const Vec3& eb = b.endpoint();
  double scale = 0;
  double diff = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    scale = std::max({scale, std::abs(ea[i]), std::abs(eb[i])});
    diff = std::max(diff, std::abs(ea[i] - eb[i]));
  }
  if (diff > 1e-12 * std::max(scale, 1.0)) {
    std::ostringstream msg;
    msg << "paths end at different stress states (max difference " << diff << ")";
    throw DomainError("path", msg.str());
  }
  if (measure == WorkMeasure::kirchhoff)
    return kirchhoff_work_along_path(a, moduli, options) - kirchhoff_work_along_path(b, moduli, options);
  return work_along_path(a, moduli, options).energy_reference -
         work_along_path(b, moduli, options).energy_reference;
}

}  // namespace hencky
