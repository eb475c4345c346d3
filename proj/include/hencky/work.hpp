#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hencky/moduli.hpp"
#include "hencky/quadrature.hpp"
#include "hencky/tensor.hpp"

namespace hencky {

struct PathSample {
  double t = 0;
  Vec3 stress{};  // principal stresses, axes fixed
};

/// Loading history parametrised by an intensity t in [0, 1], starting from
/// the unloaded state and linear between samples.
class StressPath {
 public:
  /// Throws DomainError unless there are >= 2 samples, t is strictly
  /// increasing within [0, 1], and the first stress is zero.
  explicit StressPath(std::vector<PathSample> samples);

  /// Straight path from zero through the given corner points, with t spread
  /// uniformly.
  static StressPath through(const std::vector<Vec3>& corners);

  const std::vector<PathSample>& samples() const { return samples_; }
  const Vec3& endpoint() const { return samples_.back().stress; }

 private:
  std::vector<PathSample> samples_;
};

/// Path file: a JSON array of {"t", "S1", "S2", "S3"} records.
StressPath read_stress_path(std::istream& in);
StressPath read_stress_path_file(const std::string& filename);
void write_stress_path(std::ostream& out, const StressPath& path);

/// Samples of principal logarithmic strain mapped to Cauchy stress through the
/// coaxial logarithmic law S_i = 2G{ε_i + (k - 1/3) Σε}.
StressPath stress_path_from_log_strains(const std::vector<PathSample>& strains,
                                        const ElasticModuli& moduli);

/// J = S1² + S2² + S3² - (2/m)(S1 S2 + S3 S1 + S2 S3).
double j_invariant(const Vec3& s, const ElasticModuli& moduli);
Vec3 j_gradient(const Vec3& s, const ElasticModuli& moduli);

struct WorkResult {
  double energy_reference = 0;  // A_a, per unit reference volume
  double energy_current = 0;    // A_e = exp(-S/K) A_a at the endpoint
  std::vector<double> j;        // J at each sample
  std::vector<double> cumulative_reference;  // A_a accumulated up to each sample
  double error_estimate = 0;
};

/// A_a = (1/2E) ∫ exp(S/K) dJ along the path, with S the mean stress.
WorkResult work_along_path(const StressPath& path, const ElasticModuli& moduli,
                           const QuadratureOptions& options = {});

/// ∫ T_i dε_i along a path of principal Kirchhoff stresses, with ε from the
/// inverse logarithmic Kirchhoff law. Equals the Hencky energy at the endpoint.
double kirchhoff_work_along_path(const StressPath& kirchhoff_path, const ElasticModuli& moduli,
                                 const QuadratureOptions& options = {});

enum class WorkMeasure { cauchy, kirchhoff };

/// Work along path A minus work along path B. Paths must share the endpoint.
double path_dependence_gap(const StressPath& a, const StressPath& b, const ElasticModuli& moduli,
                           WorkMeasure measure = WorkMeasure::cauchy,
                           const QuadratureOptions& options = {});

}  // namespace hencky
