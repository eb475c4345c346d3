#include "hencky/strain.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "hencky/errors.hpp"
#include "hencky/spectral.hpp"

namespace hencky {

std::string_view to_string(StrainConvention c) {
  switch (c) {
    case StrainConvention::swainger: return "swainger";
    case StrainConvention::engineering: return "engineering";
    case StrainConvention::almansi: return "almansi";
    case StrainConvention::logarithmic: return "logarithmic";
  }
  return "unknown";
}

StrainConvention parse_strain_convention(std::string_view name) {
  if (name == "swainger") return StrainConvention::swainger;
  if (name == "engineering") return StrainConvention::engineering;
  if (name == "almansi") return StrainConvention::almansi;
  if (name == "logarithmic" || name == "log" || name == "hencky") return StrainConvention::logarithmic;
  throw DomainError("convention", "unknown strain convention '" + std::string(name) + "'");
}

namespace {

[[noreturn]] void out_of_range(StrainConvention c, double value, std::string_view bound) {
  std::ostringstream msg;
  msg << to_string(c) << " strain " << value << " outside its range (" << bound << ")";
  throw DomainError("strain", msg.str());
}

}  // namespace

double to_logarithmic(StrainConvention from, double value) {
  if (!std::isfinite(value)) out_of_range(from, value, "finite");
  switch (from) {
    case StrainConvention::swainger:
      if (!(value < 1.0)) out_of_range(from, value, "e < 1");
      return -std::log1p(-value);
    case StrainConvention::engineering:
      if (!(value > -1.0)) out_of_range(from, value, "e > -1");
      return std::log1p(value);
    case StrainConvention::almansi:
      if (!(value < 0.5)) out_of_range(from, value, "e < 1/2");
      return -0.5 * std::log1p(-2.0 * value);
    case StrainConvention::logarithmic:
      return value;
  }
  return value;
}

double from_logarithmic(StrainConvention to, double log_strain) {
  if (!std::isfinite(log_strain)) out_of_range(StrainConvention::logarithmic, log_strain, "finite");
  switch (to) {
    case StrainConvention::swainger: return -std::expm1(-log_strain);
    case StrainConvention::engineering: return std::expm1(log_strain);
    case StrainConvention::almansi: return -0.5 * std::expm1(-2.0 * log_strain);
    case StrainConvention::logarithmic: return log_strain;
  }
  return log_strain;
}

StrainState::StrainState(StrainConvention convention, const Vec3& principal)
    : convention_(convention), principal_(principal) {
  for (double v : principal_) (void)to_logarithmic(convention_, v);
}

StrainState::StrainState(StrainConvention convention, const SymTensor3& tensor)
    : convention_(convention), principal_(sym_eigen(tensor).values), tensor_(tensor) {
  for (double v : principal_) (void)to_logarithmic(convention_, v);
}

Vec3 StrainState::stretches() const {
  Vec3 r{};
  for (std::size_t i = 0; i < 3; ++i) r[i] = std::exp(to_logarithmic(convention_, principal_[i]));
  return r;
}

StrainState convert_strain(const StrainState& s, StrainConvention target) {
  if (s.convention() == target) return s;
  auto map = [&](double v) { return from_logarithmic(target, to_logarithmic(s.convention(), v)); };
  if (s.tensor()) return StrainState(target, spectral_map(*s.tensor(), map));
  const Vec3& p = s.principal();
  return StrainState(target, Vec3{map(p[0]), map(p[1]), map(p[2])});
}

}  // namespace hencky
