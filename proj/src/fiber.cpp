#include "fiber.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "constants.hpp"
#include "errors.hpp"
#include "sellmeier.hpp"

namespace fmk {

double FiberSpec::n_clad(double wavelength) const {
  if (dispersive) return silica_index(wavelength);
  return std::sqrt(fixed_core_index * fixed_core_index - na * na);
}

double FiberSpec::n_core(double wavelength) const {
  if (dispersive) {
    double nc = silica_index(wavelength);
    return std::sqrt(nc * nc + na * na);
  }
  return fixed_core_index;
}

double FiberSpec::v_number(double wavelength) const {
  check_wavelength(wavelength);
  return 2.0 * kPi * core_radius / wavelength * na;
}

void FiberSpec::check_wavelength(double wavelength) const {
  if (!(wavelength >= wavelength_min && wavelength <= wavelength_max))
    throw ConfigError("wavelength outside the supported window (" +
                      std::to_string(wavelength_min * 1e9) + "-" +
                      std::to_string(wavelength_max * 1e9) + " nm)");
}

void FiberSpec::validate() const {
  if (!(core_radius > 0)) throw ConfigError("fiber: core_radius_um must be > 0");
  if (!(na > 0 && na < 1)) throw ConfigError("fiber: na must be in (0, 1)");
  if (!(length > 0)) throw ConfigError("fiber: length_m must be > 0");
  if (!dispersive && !(fixed_core_index > na && fixed_core_index > 1.0))
    throw ConfigError("fiber: fixed_core_index must exceed max(1, na)");
}

FiberSpec fiber_preset_780hp() {
  FiberSpec f;
  f.core_radius = 2.2e-6;
  f.na = 0.13;
  f.length = 0.05;
  f.dispersive = true;
  return f;
}

FiberSpec fiber_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("fiber: expected an object");
  FiberSpec f;
  bool have_preset = j.contains("preset");
  if (have_preset) {
    std::string p = j.at("preset").get<std::string>();
    if (p == "780HP" || p == "780hp")
      f = fiber_preset_780hp();
    else
      throw ConfigError("fiber: unknown preset '" + p + "'");
  }
  for (auto& [key, val] : j.items()) {
    if (key == "preset") continue;
    if (key == "core_radius_um") f.core_radius = val.get<double>() * 1e-6;
    else if (key == "na") f.na = val.get<double>();
    else if (key == "length_m") f.length = val.get<double>();
    else if (key == "dispersive") f.dispersive = val.get<bool>();
    else if (key == "fixed_core_index") f.fixed_core_index = val.get<double>();
    else throw ConfigError("fiber: unknown key '" + key + "'");
  }
  f.validate();
  return f;
}

nlohmann::json fiber_to_json(const FiberSpec& f) {
  nlohmann::json j;
  j["core_radius_um"] = f.core_radius * 1e6;
  j["na"] = f.na;
  j["length_m"] = f.length;
  j["dispersive"] = f.dispersive;
  if (!f.dispersive) j["fixed_core_index"] = f.fixed_core_index;
  return j;
}

} // namespace fmk
