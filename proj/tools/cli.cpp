#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "hencky/analytic.hpp"
#include "hencky/errors.hpp"
#include "hencky/kinematics.hpp"
#include "hencky/moduli.hpp"
#include "hencky/spectral.hpp"
#include "hencky/stress.hpp"
#include "hencky/superposition.hpp"
#include "hencky/verify.hpp"
#include "hencky/work.hpp"

namespace hencky::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Argument values

double parse_number(std::string_view text, const std::string& flag) {
  double v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty())
    throw UsageError(flag + ": '" + std::string(text) + "' is not a number");
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag, std::size_t n) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_number(std::string_view(text).substr(start, comma - start), flag));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != n)
    throw UsageError(flag + ": expected " + std::to_string(n) + " comma-separated values, got " +
                     std::to_string(out.size()));
  return out;
}

Vec3 parse_vec3(const std::string& text, const std::string& flag) {
  const auto v = parse_list(text, flag, 3);
  return {v[0], v[1], v[2]};
}

Tensor3 parse_tensor(const std::string& text, const std::string& flag) {
  const auto v = parse_list(text, flag, 9);
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

/// "start:stop:count" (count >= 2, endpoints included) or a single value.
std::vector<double> parse_range(const std::string& text, const std::string& flag) {
  const std::size_t c1 = text.find(':');
  if (c1 == std::string::npos) return {parse_number(text, flag)};
  const std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
    throw UsageError(flag + ": range must be start:stop:count");
  const double start = parse_number(std::string_view(text).substr(0, c1), flag);
  const double stop = parse_number(std::string_view(text).substr(c1 + 1, c2 - c1 - 1), flag);
  const double count = parse_number(std::string_view(text).substr(c2 + 1), flag);
  if (!(count >= 2) || count != std::floor(count) || count > 1e7)
    throw UsageError(flag + ": sweep count must be an integer >= 2");
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = i + 1 == n ? stop : start + (stop - start) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

// ---------------------------------------------------------------------------
// Report assembly

using Cell = std::variant<std::monostate, double, std::string>;

struct Report {
  json config = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<CheckResult> checks;
};

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
  return std::string(buf, r.ptr);
}

json json_number(double v, int precision) {
  if (!std::isfinite(v)) return nullptr;
  // Round through the decimal text so the shortest-form JSON dump carries
  // exactly the configured significant digits.
  const std::string s = format_number(v, precision);
  double rounded = 0;
  std::from_chars(s.data(), s.data() + s.size(), rounded);
  return rounded;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv(std::ostream& out, const Report& r, int precision) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << csv_field(r.columns[i]);
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const double* d = std::get_if<double>(&row[i])) out << format_number(*d, precision);
      else if (const std::string* s = std::get_if<std::string>(&row[i])) out << csv_field(*s);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Report& r, int precision) {
  json doc;
  doc["config"] = r.config;
  doc["rows"] = json::array();
  for (const auto& row : r.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const double* d = std::get_if<double>(&row[i])) obj[r.columns[i]] = json_number(*d, precision);
      else if (const std::string* s = std::get_if<std::string>(&row[i])) obj[r.columns[i]] = *s;
      else obj[r.columns[i]] = nullptr;
    }
    doc["rows"].push_back(std::move(obj));
  }
  doc["checks"] = json::array();
  for (const CheckResult& c : r.checks)
    doc["checks"].push_back({{"name", c.name},
                             {"measured", json_number(c.measured, precision)},
                             {"bound", json_number(c.bound, precision)},
                             {"passed", c.passed}});
  out << doc.dump(1) << '\n';
}

// ---------------------------------------------------------------------------
// Configuration shared by the subcommands

struct Options {
  double shear = 1.0;
  std::optional<double> m;
  std::optional<double> nu;
  bool incompressible = false;
  std::string format = "csv";
  int precision = 12;
  std::string output;

  std::string model = "cauchy1928";
  std::string stretches;
  std::string gradient;
  std::optional<double> mean_stress;
  std::optional<double> mean_stress_increment;

  std::string lambda = "0:0.5:11";
  std::string x = "0:0.5:11";
  double h = 0.01;
  double radius = 1.0;
  std::string ratio = "1:3:201";

  std::string path;
  std::string compare;
  std::string measure = "cauchy";

  std::string state = "0,0,0";
  std::string increment;

  std::string velocity_gradient;
  double duration = 1.0;
  double step = 1e-3;
  std::string scheme = "rk4";
  bool as_printed = false;

  std::string seed;
};

constexpr double kDefaultContractionNumber = 4.0;

ElasticModuli build_moduli(const Options& o) {
  if (o.incompressible) return ElasticModuli::incompressible(o.shear);
  if (o.nu) return ElasticModuli::from_poisson_ratio(o.shear, *o.nu);
  return ElasticModuli::from_contraction_number(o.shear, o.m.value_or(kDefaultContractionNumber));
}

json moduli_config(const ElasticModuli& mod, int precision) {
  json c;
  c["G"] = json_number(mod.shear(), precision);
  if (mod.is_incompressible()) {
    c["m"] = 2;
    c["incompressible"] = true;
  } else {
    c["m"] = std::isinf(mod.contraction_number()) ? json("inf") : json_number(mod.contraction_number(), precision);
    c["incompressible"] = false;
  }
  c["nu"] = json_number(mod.poisson_ratio(), precision);
  c["E"] = json_number(mod.young(), precision);
  return c;
}

Cell opt_cell(const ElasticModuli& mod, double (ElasticModuli::*getter)() const) {
  if (mod.is_incompressible()) return std::monostate{};
  return (mod.*getter)();
}

// ---------------------------------------------------------------------------
// Subcommands

void cmd_moduli(const Options&, const ElasticModuli& mod, Report& r) {
  r.columns = {"G", "m", "nu", "E", "k", "K", "Lambda", "inverse_K", "near_incompressible"};
  r.rows.push_back({mod.shear(), mod.contraction_number(), mod.poisson_ratio(), mod.young(),
                    opt_cell(mod, &ElasticModuli::k), opt_cell(mod, &ElasticModuli::bulk),
                    opt_cell(mod, &ElasticModuli::lame), mod.inverse_bulk(),
                    mod.near_incompressible() ? 1.0 : 0.0});
}

void cmd_stress(const Options& o, const ElasticModuli& mod, Report& r) {
  if (o.stretches.empty() == o.gradient.empty())
    throw UsageError("stress: give exactly one of --stretches or --gradient");
  const DeformationState d = o.stretches.empty()
                                 ? DeformationState::from_gradient(parse_tensor(o.gradient, "--gradient"))
                                 : DeformationState::from_stretches(parse_vec3(o.stretches, "--stretches"));
  std::optional<StressState> s;
  bool has_energy = true;
  if (o.model == "hooke") {
    s = hooke_stress(d.principal_strain(StrainConvention::swainger), mod);
    has_energy = false;
  } else if (o.model == "cauchy1928") {
    s = cauchy_stress_1928(d, mod, o.mean_stress);
  } else if (o.model == "kirchhoff1929") {
    s = kirchhoff_stress_1929(d, mod, o.mean_stress);
  } else {
    throw UsageError("--model: expected hooke, cauchy1928 or kirchhoff1929");
  }
  r.config["model"] = o.model;
  const Vec3 swainger = d.principal_strain(StrainConvention::swainger).principal();
  r.columns = {"axis",          "stretch",       "eps_hencky",    "e_swainger",       "S_cauchy",
               "T_kirchhoff",   "sigma_reduced_dev", "sigma_reduced_mean", "det_F", "energy_per_ref_volume"};
  for (std::size_t i = 0; i < 3; ++i) {
    r.rows.push_back({static_cast<double>(i + 1), d.stretches()[i], d.log_principal()[i], swainger[i],
                      s->cauchy_principal()[i], s->kirchhoff_principal()[i], s->reduced_principal()[i],
                      s->reduced_mean(), d.volume_ratio(),
                      has_energy ? Cell(hencky_energy(d, mod)) : Cell(std::monostate{})});
  }
}

void cmd_rod(const Options& o, const ElasticModuli& mod, Report& r) {
  const auto lambdas = parse_range(o.lambda, "--lambda");
  r.columns = {"lambda_swainger_axial", "x_swainger_lateral", "stretch_axial", "stretch_lateral",
               "Sz",                    "Sz_over_E",          "secant_ratio",  "energy_per_ref_volume"};
  for (double lambda : lambdas) {
    const RodSolution s = rod(lambda, mod);
    r.rows.push_back({s.lambda, s.lateral_ratio, s.axial_stretch, s.lateral_stretch, s.axial_stress,
                      s.axial_stress / mod.young(), s.secant_modulus / mod.young(), s.energy});
  }
}

void cmd_membrane(const Options& o, const ElasticModuli& mod, Report& r) {
  const auto xs = parse_range(o.x, "--x");
  r.columns = {"x_swainger_inplane", "lambda_swainger_thickness", "stretch_inplane", "stretch_thickness",
               "Sr",                 "Sr_over_E",                 "energy_per_ref_volume"};
  for (double x : xs) {
    const MembraneSolution s = membrane(x, mod);
    r.rows.push_back({s.x, s.lambda, s.inplane_stretch, s.thickness_stretch, s.inplane_stress,
                      s.inplane_stress / mod.young(), s.energy});
  }
}

void cmd_balloon(const Options& o, const ElasticModuli& mod, Report& r, std::ostream& err) {
  const auto ratios = parse_range(o.ratio, "--ratio");
  std::vector<BalloonSolution> sols;
  for (double rho : ratios) sols.push_back(balloon(rho, o.h, o.radius, mod));
  std::size_t peak = 0;
  for (std::size_t i = 1; i < sols.size(); ++i)
    if (sols[i].pressure > sols[peak].pressure) peak = i;
  if (!sols.empty() && sols.front().thin_wall_warning)
    err << "warning: h/R = " << o.h / o.radius << " exceeds the thin-wall limit " << kThinWallLimit << '\n';
  r.config["h"] = json_number(o.h, o.precision);
  r.config["R"] = json_number(o.radius, o.precision);
  r.config["rho_peak_analytic"] = json_number(balloon_peak_ratio(mod), o.precision);
  r.columns = {"rho_radius_ratio", "radius_current", "thickness_current", "S_membrane", "pressure", "peak"};
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const BalloonSolution& s = sols[i];
    r.rows.push_back({s.ratio, s.current_radius, s.current_thickness, s.membrane_stress, s.pressure,
                      i == peak ? 1.0 : 0.0});
  }
}

void cmd_work(const Options& o, const ElasticModuli& mod, Report& r) {
  const StressPath path = read_stress_path_file(o.path);
  const auto& samples = path.samples();
  r.config["path"] = o.path;
  r.config["measure"] = o.measure;
  if (o.measure == "cauchy") {
    const WorkResult w = work_along_path(path, mod);
    r.columns = {"t", "S1", "S2", "S3", "J", "A_a", "A_e"};
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Vec3& s = samples[i].stress;
      const double mean = (s[0] + s[1] + s[2]) / 3.0;
      const double a_a = w.cumulative_reference[i];
      r.rows.push_back({samples[i].t, s[0], s[1], s[2], w.j[i], a_a, std::exp(-mean * mod.inverse_bulk()) * a_a});
    }
    r.config["A_a"] = json_number(w.energy_reference, o.precision);
    r.config["A_e"] = json_number(w.energy_current, o.precision);
    r.config["quadrature_error"] = json_number(w.error_estimate, o.precision);
  } else if (o.measure == "kirchhoff") {
    r.columns = {"t", "T1", "T2", "T3", "work_kirchhoff", "energy_hencky"};
    for (std::size_t i = 0; i < samples.size(); ++i) {
      double work = 0;
      if (i > 0) {
        const std::vector<PathSample> prefix(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        work = kirchhoff_work_along_path(StressPath(prefix), mod);
      }
      const Vec3& t = samples[i].stress;
      r.rows.push_back({samples[i].t, t[0], t[1], t[2], work, hencky_energy(log_strain_from_kirchhoff(t, mod), mod)});
    }
    r.config["work"] = json_number(kirchhoff_work_along_path(path, mod), o.precision);
  } else {
    throw UsageError("--measure: expected cauchy or kirchhoff");
  }
  if (!o.compare.empty()) {
    const StressPath other = read_stress_path_file(o.compare);
    const WorkMeasure m = o.measure == "cauchy" ? WorkMeasure::cauchy : WorkMeasure::kirchhoff;
    r.config["compare"] = o.compare;
    r.config["gap"] = json_number(path_dependence_gap(path, other, mod, m), o.precision);
  }
}

void cmd_superpose(const Options& o, const ElasticModuli& mod, Report& r) {
  if (o.increment.empty()) throw UsageError("superpose: --increment is required");
  const Vec3 e = parse_vec3(o.state, "--state");
  const Vec3 de = parse_vec3(o.increment, "--increment");
  if (mod.is_incompressible() && (!o.mean_stress || !o.mean_stress_increment))
    throw UsageError("superpose: incompressible moduli need --mean-stress and --mean-stress-increment");
  const Vec3 composed = compose_coaxial(e, de);
  const auto stress_of = [&](const Vec3& sw, std::optional<double> p) {
    return cauchy_stress_1928(DeformationState::from_strain(StrainState(StrainConvention::swainger, sw)), mod, p)
        .cauchy_principal();
  };
  std::optional<double> after_mean;
  if (o.mean_stress) after_mean = *o.mean_stress + o.mean_stress_increment.value_or(0.0);
  const Vec3 before = stress_of(e, o.mean_stress);
  const Vec3 after = stress_of(composed, after_mean);
  const CoaxialIncrement inc = stress_increment_coaxial(de, mod, o.mean_stress_increment);
  r.columns = {"axis",    "e_swainger_state", "de_swainger_increment", "e_swainger_composed",
               "S_state", "S_composed",       "dS_increment"};
  for (std::size_t i = 0; i < 3; ++i)
    r.rows.push_back({static_cast<double>(i + 1), e[i], de[i], composed[i], before[i], after[i],
                      inc.stress_increment[i]});
}

void cmd_rate(const Options& o, const ElasticModuli& mod, Report& r) {
  if (o.velocity_gradient.empty()) throw UsageError("rate: --velocity-gradient is required");
  RateScheme scheme;
  if (o.scheme == "rk4") scheme = RateScheme::rk4;
  else if (o.scheme == "euler") scheme = RateScheme::euler;
  else throw UsageError("--scheme: expected rk4 or euler");
  if (!(o.duration > 0) || !std::isfinite(o.duration)) throw DomainError("duration", "must be positive and finite");
  if (!(o.step > 0) || !std::isfinite(o.step)) throw DomainError("step", "must be positive and finite");

  const VelocityGradient v(parse_tensor(o.velocity_gradient, "--velocity-gradient"));
  const ReducedStressRate lin = linearized_superposition_rate(v, o.as_printed);
  r.config["scheme"] = o.scheme;
  r.config["duration"] = json_number(o.duration, o.precision);
  r.config["step"] = json_number(o.step, o.precision);
  r.config["as_printed"] = o.as_printed;

  static constexpr const char* kSuffix[] = {"xx", "yy", "zz", "xy", "yz", "xz"};
  static constexpr std::size_t kI[] = {0, 1, 2, 0, 1, 0};
  static constexpr std::size_t kJ[] = {0, 1, 2, 1, 2, 2};
  r.columns = {"t"};
  for (const char* s : kSuffix) r.columns.push_back(std::string("e_almansi_") + s);
  for (const char* s : kSuffix) r.columns.push_back(std::string("S_cauchy_") + s);
  r.columns.push_back("sigma_reduced_mean_linear");
  for (const char* s : kSuffix) r.columns.push_back(std::string("sigma_reduced_dev_linear_") + s);

  integrate_strain({}, v.stretching(), o.duration, o.step, scheme, [&](double t, const SymTensor3& e) {
    std::vector<Cell> row{t};
    for (std::size_t c = 0; c < 6; ++c) row.push_back(e(kI[c], kJ[c]));
    // Almansi strain 2e = I - V⁻², so V = (I - 2e)^(-1/2).
    const SymTensor3 b_inv = SymTensor3::identity() - 2.0 * e;
    const EigenSystem es = sym_eigen(b_inv);
    if (!(es.values[2] > 0)) throw DomainError("duration", "strain left the admissible range (I - 2e not positive)");
    if (mod.is_incompressible()) {
      for (std::size_t c = 0; c < 6; ++c) row.emplace_back(std::monostate{});
    } else {
      const SymTensor3 stretch = spectral_map(b_inv, [](double x) { return 1.0 / std::sqrt(x); });
      const SymTensor3 s = cauchy_stress_1928(DeformationState::from_gradient(stretch.full()), mod).cauchy();
      for (std::size_t c = 0; c < 6; ++c) row.push_back(s(kI[c], kJ[c]));
    }
    row.push_back(lin.mean_rate * t);
    for (std::size_t c = 0; c < 6; ++c) row.push_back(lin.deviator_rate(kI[c], kJ[c]) * t);
    r.rows.push_back(std::move(row));
  });
}

std::uint64_t resolve_seed(const Options& o) {
  std::string text = o.seed;
  if (text.empty())
    if (const char* env = std::getenv("HENCKY_SEED")) text = env;
  if (text.empty()) return kDefaultVerifySeed;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("--seed: '" + text + "' is not an unsigned 64-bit integer");
  }
}

bool cmd_verify(const Options& o, Report& r) {
  const VerifyReport v = run_verification(resolve_seed(o));
  r.config["seed"] = v.seed;
  r.checks = v.checks;
  r.columns = {"check", "measured", "bound", "status", "seed"};
  for (const CheckResult& c : v.checks)
    r.rows.push_back({c.name, c.measured, c.bound, std::string(c.passed ? "pass" : "FAIL"),
                      std::to_string(v.seed)});
  return v.all_passed();
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--G", o.shear, "Shear modulus")->capture_default_str();
  auto* m = sub->add_option("--m", o.m, "Lateral contraction number (> 2, 'inf' allowed; default 4)");
  auto* nu = sub->add_option("--nu", o.nu, "Poisson ratio in [0, 0.5)");
  auto* inc = sub->add_flag("--incompressible", o.incompressible, "Incompressible limit m = 2");
  m->excludes(nu);
  m->excludes(inc);
  nu->excludes(inc);
  sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--precision", o.precision, "Significant digits")->check(CLI::Range(1, 17))->capture_default_str();
  sub->add_option("--output,-o", o.output, "Write the report to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Logarithmic-strain elasticity kernels", "hencky"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");  // -h is taken by balloon --h

  CLI::App* moduli = app.add_subcommand("moduli", "Derive the full set of elastic moduli");

  CLI::App* stress = app.add_subcommand("stress", "Stresses for a stretch triple or deformation gradient");
  stress->add_option("--model", o.model, "hooke, cauchy1928 or kirchhoff1929")->capture_default_str();
  stress->add_option("--stretches", o.stretches, "Principal stretches l1,l2,l3");
  stress->add_option("--gradient", o.gradient, "Deformation gradient, 9 values row-major");
  stress->add_option("--mean-stress", o.mean_stress, "Mean stress (incompressible only)");

  CLI::App* rod_cmd = app.add_subcommand("rod", "Uniaxially loaded rod");
  rod_cmd->add_option("--lambda", o.lambda, "Axial Swainger strain, start:stop:count")->capture_default_str();

  CLI::App* membrane_cmd = app.add_subcommand("membrane", "Plate stretched equally in its plane");
  membrane_cmd->add_option("--x", o.x, "In-plane Swainger strain, start:stop:count")->capture_default_str();

  CLI::App* balloon_cmd = app.add_subcommand("balloon", "Thin spherical balloon inflation");
  balloon_cmd->add_option("--h", o.h, "Initial wall thickness")->capture_default_str();
  balloon_cmd->add_option("--R", o.radius, "Initial radius")->capture_default_str();
  balloon_cmd->add_option("--ratio", o.ratio, "Radius ratio, start:stop:count")->capture_default_str();

  CLI::App* work = app.add_subcommand("work", "Work along a principal stress path");
  work->add_option("--path", o.path, "Path file (JSON array of {t, S1, S2, S3})")->required();
  work->add_option("--compare", o.compare, "Second path file; reports the work gap");
  work->add_option("--measure", o.measure, "cauchy or kirchhoff")->capture_default_str();

  CLI::App* superpose = app.add_subcommand("superpose", "Coaxial superposition of Swainger strains");
  superpose->add_option("--state", o.state, "Prior strain e1,e2,e3")->capture_default_str();
  superpose->add_option("--increment", o.increment, "Increment de1,de2,de3");
  superpose->add_option("--mean-stress", o.mean_stress, "Prior mean stress (incompressible only)");
  superpose->add_option("--mean-stress-increment", o.mean_stress_increment, "Mean stress increment (incompressible only)");

  CLI::App* rate = app.add_subcommand("rate", "Strain and stress history under a constant velocity gradient");
  rate->add_option("--velocity-gradient", o.velocity_gradient, "dv_n/dx_m as 9 values, row m");
  rate->add_option("--duration", o.duration)->capture_default_str();
  rate->add_option("--step", o.step)->capture_default_str();
  rate->add_option("--scheme", o.scheme, "rk4 or euler")->capture_default_str();
  rate->add_flag("--as-printed", o.as_printed, "Use + in the volumetric term of the linearized deviatoric rate");

  CLI::App* verify = app.add_subcommand("verify", "Run the invariant and oracle suite");
  verify->add_option("--seed", o.seed, "Seed for randomized sweeps (else HENCKY_SEED, else built-in)");

  for (CLI::App* sub : {moduli, stress, rod_cmd, membrane_cmd, balloon_cmd, work, superpose, rate, verify})
    add_common(sub, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kSuccess;
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  Report report;
  bool verified = true;
  try {
    if (o.m && std::isnan(*o.m)) throw DomainError("m", "must be a number");
    const ElasticModuli mod = build_moduli(o);
    report.config["command"] = app.get_subcommands().front()->get_name();
    report.config["moduli"] = moduli_config(mod, o.precision);
    if (app.got_subcommand(moduli)) cmd_moduli(o, mod, report);
    else if (app.got_subcommand(stress)) cmd_stress(o, mod, report);
    else if (app.got_subcommand(rod_cmd)) cmd_rod(o, mod, report);
    else if (app.got_subcommand(membrane_cmd)) cmd_membrane(o, mod, report);
    else if (app.got_subcommand(balloon_cmd)) cmd_balloon(o, mod, report, err);
    else if (app.got_subcommand(work)) cmd_work(o, mod, report);
    else if (app.got_subcommand(superpose)) cmd_superpose(o, mod, report);
    else if (app.got_subcommand(rate)) cmd_rate(o, mod, report);
    else if (app.got_subcommand(verify)) verified = cmd_verify(o, report);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << " (best estimate " << e.best_estimate() << ", gap " << e.gap()
        << ")\n";
    return kDomainError;
  }
  report.config["format"] = o.format;
  report.config["precision"] = o.precision;

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) {
      err << "usage error: --output: cannot open '" << o.output << "'\n";
      return kUsageError;
    }
  }
  std::ostream& sink = o.output.empty() ? out : file;
  if (o.format == "json") write_json(sink, report, o.precision);
  else write_csv(sink, report, o.precision);
  if (!verified) {
    err << "verification failed\n";
    return kVerifyFailure;
  }
  return kSuccess;
}

}  // namespace hencky::cli
