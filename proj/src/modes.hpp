#pragma once
#include <array>
#include <string>
#include <vector>

#include "fiber.hpp"

namespace fmk {

enum class ModeFamily { HE, EH, TE, TM };

// Fixed six-mode basis order used for every modal state vector in the toolkit.
enum BasisIndex : int { kHE11x = 0, kHE11y = 1, kTE01 = 2, kTM01 = 3, kHE21a = 4, kHE21b = 5 };
inline constexpr int kBasisSize = 6;
extern const std::array<const char*, kBasisSize> kBasisLabels;

// One guided vector mode of a step-index fiber. Hybrid (HE/EH) modes carry an
// orientation: orient 0 is the cos-type member of the degenerate pair ('x' for
// nu=1, 'b' for nu>=2), orient 1 the sin-type ('y' / 'a'). The 'a' convention
// is pinned by the identity LP11x(V-pol) = (TE01 + HE21a)/sqrt(2):
// e_a(phi) = sin(phi) x + cos(phi) y, e_b(phi) = cos(phi) x - sin(phi) y.
struct GuidedMode {
  ModeFamily family = ModeFamily::HE;
  int nu = 1;     // azimuthal order of the exact solution
  int radial = 1; // radial index, 1-based
  int orient = 0;
  double u = 0, w = 0; // normalized transverse parameters, u^2 + w^2 = V^2
  double n_eff = 0;
  double s = 0; // hybrid polarization parameter, 0 for TE/TM
  double wavelength = 0;
  double core_radius = 0, n_core = 0, n_clad = 0;
  std::string label;

  // Residual of the exact characteristic equation at (u, w).
  double char_residual() const;
};

// Transverse electric field (Ex, Ey) at a point, arbitrary overall scale.
// Sign convention: the dominant transverse component is positive near the
// phi = 0 lobe. Tangential components are exactly continuous across r = a;
// the normal component of hybrid/TM modes carries the physical epsilon jump.
std::array<double, 2> mode_field(const GuidedMode& m, double x, double y);
double mode_intensity(const GuidedMode& m, double x, double y);

struct LpMode {
  int l = 0, m = 1;
  double u = 0, w = 0, n_eff = 0;
  std::string label;
};

// Number of guided LP(l,m) solutions of the scalar characteristic equation.
int count_guided_lp_groups(const FiberSpec& f, double wavelength);
std::vector<LpMode> solve_lp_modes(const FiberSpec& f, double wavelength);

// Every guided vector mode at the wavelength, exact dispersion relations,
// sorted by descending n_eff, hybrid modes listed once per orientation.
std::vector<GuidedMode> solve_vector_modes(const FiberSpec& f, double wavelength);

// The fixed six-mode basis [HE11x, HE11y, TE01, TM01, HE21a, HE21b]. Requires
// the LP01+LP11 group structure (exactly two guided LP groups).
std::array<GuidedMode, kBasisSize> solve_vector_basis(const FiberSpec& f, double wavelength);

// HE11, single orientation (orient 0).
GuidedMode solve_fundamental(const FiberSpec& f, double wavelength);

// lambda / |n_eff_a - n_eff_b|; throws NumericError for a degenerate pair.
double beat_length(const GuidedMode& a, const GuidedMode& b);

// n_g = n_eff - lambda dn_eff/dlambda, central difference with a 0.1 nm step,
// following the same (family, nu, radial) branch at the shifted wavelengths.
double mode_group_index(const FiberSpec& f, double wavelength, const GuidedMode& proto);

// Walk-off d_w = (n_g_signal - n_g_pump)/c between the fundamental modes at the
// two wavelengths, s/m; positive means the signal lags the pump per unit
// length. For a fixed-index fiber the value is 0 and dispersive is false.
struct WalkOff {
  double value = 0;
  bool dispersive = false;
};
WalkOff walk_off(const FiberSpec& f, double lambda_signal, double lambda_pump);

// Intensity overlap f_jk = Int(Ij Ik dA) / (Int(Ij dA) Int(Ik dA)), 1/m^2.
// Adaptive radial quadrature (rel. tol 1e-7) with a trapezoid azimuthal rule.
double overlap_integral(const GuidedMode& a, const GuidedMode& b);
double effective_area(const GuidedMode& m); // 1 / f_mm

} // namespace fmk
