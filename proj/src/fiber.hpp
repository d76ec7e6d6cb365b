#pragma once
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace fmk {

// Step-index fiber description. Indices either follow a Sellmeier model
// (cladding = fused silica, core raised so the NA stays fixed) or are held
// constant (no chromatic dispersion, used for idealized studies).
struct FiberSpec {
  double core_radius = 2.2e-6; // m
  double na = 0.13;
  double length = 0.05; // m
  bool dispersive = true;
  double fixed_core_index = 1.4600; // used when !dispersive
  double wavelength_min = 0.4e-6;
  double wavelength_max = 1.1e-6;

  double n_clad(double wavelength) const;
  double n_core(double wavelength) const;
  double v_number(double wavelength) const;
  void check_wavelength(double wavelength) const;
  void validate() const;
};

// Single-mode 780 nm fiber preset: a = 2.2 um, NA = 0.13, L = 5 cm,
// dispersive silica cladding.
FiberSpec fiber_preset_780hp();

// Parse {"preset": "780HP", overrides...} or a bare parameter object. Keys:
// core_radius_um, na, length_m, dispersive, fixed_core_index.
FiberSpec fiber_from_json(const nlohmann::json& j);
nlohmann::json fiber_to_json(const FiberSpec& f);

} // namespace fmk
