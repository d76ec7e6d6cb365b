#include "modes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>

#include "constants.hpp"
#include "errors.hpp"

namespace fmk {

const std::array<const char*, kBasisSize> kBasisLabels = {
    "HE11x", "HE11y", "TE01", "TM01", "HE21a", "HE21b"};

namespace {

double bj(int n, double x) { return boost::math::cyl_bessel_j(n, x); }
double bjp(int n, double x) { return boost::math::cyl_bessel_j_prime(n, x); }
double bk(int n, double x) { return boost::math::cyl_bessel_k(std::abs(n), x); }
double bkp(int n, double x) { return boost::math::cyl_bessel_k_prime(std::abs(n), x); }

struct CharContext {
  double V = 0;
  double q = 1; // (n_clad/n_core)^2
};

// Pole-free characteristic functions. Each vanishes exactly at the guided-mode
// eigenvalues and nowhere else on (0, V).
double lp_char(int l, double u, const CharContext& c) {
  double w = std::sqrt(std::max(c.V * c.V - u * u, 0.0));
  return u * bj(l - 1, u) * bk(l, w) + w * bk(l - 1, w) * bj(l, u);
}

double te_char(double u, const CharContext& c) {
  double w = std::sqrt(std::max(c.V * c.V - u * u, 0.0));
  return bj(1, u) * w * bk(0, w) + bk(1, w) * u * bj(0, u);
}

double tm_char(double u, const CharContext& c) {
  double w = std::sqrt(std::max(c.V * c.V - u * u, 0.0));
  return bj(1, u) * w * bk(0, w) + c.q * bk(1, w) * u * bj(0, u);
}

// Hybrid branch value B such that J'_nu(u)/(u J_nu(u)) = B on the branch;
// sign -1 selects HE, +1 selects EH.
double hybrid_branch(int nu, double u, double w, const CharContext& c, int sign) {
  double kt = bkp(nu, w) / (w * bk(nu, w));
  double iu2 = 1.0 / (u * u), iw2 = 1.0 / (w * w);
  double r = double(nu) * double(nu) * (iu2 + iw2) * (iu2 + c.q * iw2);
  double half = 0.5 * (1.0 - c.q) * kt;
  return -0.5 * (1.0 + c.q) * kt + sign * std::sqrt(half * half + r);
}

double hybrid_char(int nu, int sign, double u, const CharContext& c) {
  double w = std::sqrt(std::max(c.V * c.V - u * u, 0.0));
  double b = hybrid_branch(nu, u, w, c, sign);
  return bjp(nu, u) - b * u * bj(nu, u);
}

// Uniform 2000-point sign-change scan over (0, V), bisection refinement.
std::vector<double> find_roots(const std::function<double(double)>& f, double V) {
  constexpr int kScan = 2000;
  const double lo = V * 1e-9, hi = V * (1.0 - 1e-9);
  std::vector<double> roots;
  double xp = lo, fp = f(lo);
  for (int i = 1; i <= kScan; ++i) {
    double x = lo + (hi - lo) * double(i) / kScan;
    double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (fp != 0.0 && std::signbit(fx) != std::signbit(fp)) {
      double a = xp, b = x, fa = fp;
      for (int it = 0; it < 200 && (b - a) > 1e-16 * V; ++it) {
        double m = 0.5 * (a + b), fm = f(m);
        if (fm == 0.0) { a = b = m; break; }
        if (std::signbit(fm) == std::signbit(fa)) { a = m; fa = fm; }
        else b = m;
      }
      roots.push_back(0.5 * (a + b));
    }
    xp = x;
    fp = fx;
  }
  return roots;
}

double n_eff_from_u(const FiberSpec& f, double wavelength, double u) {
  double n1 = f.n_core(wavelength);
  double t = u * wavelength / (2.0 * kPi * f.core_radius);
  return std::sqrt(n1 * n1 - t * t);
}

std::string hybrid_label(ModeFamily fam, int nu, int radial, int orient) {
  std::string base = (fam == ModeFamily::HE ? "HE" : "EH");
  base += std::to_string(nu) + std::to_string(radial);
  if (nu == 1) base += (orient == 0 ? 'x' : 'y');
  else base += (orient == 0 ? 'b' : 'a');
  return base;
}

GuidedMode make_mode(const FiberSpec& f, double wavelength, ModeFamily fam, int nu,
                     int radial, int orient, double u) {
  GuidedMode m;
  m.family = fam;
  m.nu = nu;
  m.radial = radial;
  m.orient = orient;
  m.u = u;
  double V = f.v_number(wavelength);
  m.w = std::sqrt(std::max(V * V - u * u, 0.0));
  m.n_eff = n_eff_from_u(f, wavelength, u);
  m.wavelength = wavelength;
  m.core_radius = f.core_radius;
  m.n_core = f.n_core(wavelength);
  m.n_clad = f.n_clad(wavelength);
  if (fam == ModeFamily::HE || fam == ModeFamily::EH) {
    double jt = bjp(nu, u) / (u * bj(nu, u));
    double kt = bkp(nu, m.w) / (m.w * bk(nu, m.w));
    m.s = double(nu) * (1.0 / (u * u) + 1.0 / (m.w * m.w)) / (jt + kt);
    m.label = hybrid_label(fam, nu, radial, orient);
  } else {
    m.s = 0.0;
    m.label = (fam == ModeFamily::TE ? "TE0" : "TM0") + std::to_string(radial);
  }
  return m;
}

std::vector<double> family_roots(const FiberSpec& f, double wavelength, ModeFamily fam, int nu) {
  CharContext c;
  c.V = f.v_number(wavelength);
  double n1 = f.n_core(wavelength), n2 = f.n_clad(wavelength);
  c.q = (n2 * n2) / (n1 * n1);
  std::function<double(double)> fn;
  switch (fam) {
    case ModeFamily::TE: fn = [&c](double u) { return te_char(u, c); }; break;
    case ModeFamily::TM: fn = [&c](double u) { return tm_char(u, c); }; break;
    case ModeFamily::HE: fn = [&c, nu](double u) { return hybrid_char(nu, -1, u, c); }; break;
    case ModeFamily::EH: fn = [&c, nu](double u) { return hybrid_char(nu, +1, u, c); }; break;
  }
  return find_roots(fn, c.V);
}

} // namespace

double GuidedMode::char_residual() const {
  double q = (n_clad * n_clad) / (n_core * n_core);
  switch (family) {
    case ModeFamily::TE:
      return std::abs(bj(1, u) / (u * bj(0, u)) + bk(1, w) / (w * bk(0, w)));
    case ModeFamily::TM:
      return std::abs(bj(1, u) / (u * bj(0, u)) + q * bk(1, w) / (w * bk(0, w)));
    case ModeFamily::HE:
    case ModeFamily::EH: {
      double jt = bjp(nu, u) / (u * bj(nu, u));
      double kt = bkp(nu, w) / (w * bk(nu, w));
      double iu2 = 1.0 / (u * u), iw2 = 1.0 / (w * w);
      double r = double(nu) * double(nu) * (iu2 + iw2) * (iu2 + q * iw2);
      return std::abs((jt + kt) * (jt + q * kt) - r);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::array<double, 2> mode_field(const GuidedMode& m, double x, double y) {
  double r = std::hypot(x, y), phi = std::atan2(y, x);
  double a = m.core_radius;
  bool core = r <= a;
  switch (m.family) {
    case ModeFamily::TE: {
      double g = core ? bj(1, m.u * r / a) / bj(1, m.u) : bk(1, m.w * r / a) / bk(1, m.w);
      return {-g * std::sin(phi), g * std::cos(phi)};
    }
    case ModeFamily::TM: {
      double eps = (m.n_core * m.n_core) / (m.n_clad * m.n_clad);
      double g = core ? bj(1, m.u * r / a) / bj(1, m.u)
                      : eps * bk(1, m.w * r / a) / bk(1, m.w);
      return {g * std::cos(phi), g * std::sin(phi)};
    }
    case ModeFamily::HE:
    case ModeFamily::EH: {
      // Exact transverse hybrid field in circular components:
      //   core: Ex = E- - E+, Ey = i(E- + E+)
      //   clad: Ex = E- + E+, Ey = i(E- - E+)
      // with E-+ carrying J/K(nu-+1) radial parts weighted by (1 -+ s).
      using cd = std::complex<double>;
      int nu = m.nu;
      cd em, ep;
      if (core) {
        double xr = m.u * r / a;
        em = (1.0 - m.s) / m.u * bj(nu - 1, xr) * std::polar(1.0, (nu - 1) * phi);
        ep = (1.0 + m.s) / m.u * bj(nu + 1, xr) * std::polar(1.0, (nu + 1) * phi);
      } else {
        double xr = m.w * r / a;
        double scale = bj(nu, m.u) / bk(nu, m.w);
        em = scale * (1.0 - m.s) / m.w * bk(nu - 1, xr) * std::polar(1.0, (nu - 1) * phi);
        ep = scale * (1.0 + m.s) / m.w * bk(nu + 1, xr) * std::polar(1.0, (nu + 1) * phi);
      }
      cd ex = core ? em - ep : em + ep;
      cd ey = core ? cd(0, 1) * (em + ep) : cd(0, 1) * (em - ep);
      if (m.orient == 0) return {ex.real(), ey.real()};
      return {ex.imag(), ey.imag()};
    }
  }
  return {0, 0};
}

double mode_intensity(const GuidedMode& m, double x, double y) {
  auto e = mode_field(m, x, y);
  return e[0] * e[0] + e[1] * e[1];
}

int count_guided_lp_groups(const FiberSpec& f, double wavelength) {
  return int(solve_lp_modes(f, wavelength).size());
}

std::vector<LpMode> solve_lp_modes(const FiberSpec& f, double wavelength) {
  f.validate();
  f.check_wavelength(wavelength);
  CharContext c;
  c.V = f.v_number(wavelength);
  std::vector<LpMode> out;
  for (int l = 0;; ++l) {
    auto fn = [&c, l](double u) { return lp_char(l, u, c); };
    auto roots = find_roots(fn, c.V);
    if (roots.empty()) {
      if (l == 0) break; // V too small for anything would be unphysical input
      break;
    }
    for (size_t i = 0; i < roots.size(); ++i) {
      LpMode lm;
      lm.l = l;
      lm.m = int(i) + 1;
      lm.u = roots[i];
      lm.w = std::sqrt(std::max(c.V * c.V - lm.u * lm.u, 0.0));
      lm.n_eff = n_eff_from_u(f, wavelength, lm.u);
      lm.label = "LP" + std::to_string(l) + std::to_string(lm.m);
      double res = std::abs(lm.u * bj(l - 1, lm.u) / bj(l, lm.u) +
                            lm.w * bk(l - 1, lm.w) / bk(l, lm.w));
      if (!(res < 1e-12))
        throw NumericError("solve_lp_modes: root refinement failed for " + lm.label);
      out.push_back(lm);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LpMode& a, const LpMode& b) { return a.n_eff > b.n_eff; });
  return out;
}

std::vector<GuidedMode> solve_vector_modes(const FiberSpec& f, double wavelength) {
  f.validate();
  f.check_wavelength(wavelength);
  std::vector<GuidedMode> out;
  auto emit = [&](ModeFamily fam, int nu, const std::vector<double>& roots) {
    for (size_t i = 0; i < roots.size(); ++i) {
      int radial = int(i) + 1;
      if (fam == ModeFamily::TE || fam == ModeFamily::TM) {
        out.push_back(make_mode(f, wavelength, fam, 0, radial, 0, roots[i]));
      } else {
        for (int orient = 0; orient < 2; ++orient)
          out.push_back(make_mode(f, wavelength, fam, nu, radial, orient, roots[i]));
      }
    }
  };
  emit(ModeFamily::TE, 0, family_roots(f, wavelength, ModeFamily::TE, 0));
  emit(ModeFamily::TM, 0, family_roots(f, wavelength, ModeFamily::TM, 0));
  for (int nu = 1;; ++nu) {
    auto roots = family_roots(f, wavelength, ModeFamily::HE, nu);
    if (roots.empty()) break;
    emit(ModeFamily::HE, nu, roots);
  }
  for (int nu = 1;; ++nu) {
    auto roots = family_roots(f, wavelength, ModeFamily::EH, nu);
    if (roots.empty()) break;
    emit(ModeFamily::EH, nu, roots);
  }
  for (const auto& m : out)
    if (!(m.char_residual() < 1e-10))
      throw NumericError("solve_vector_modes: residual check failed for " + m.label);
  std::stable_sort(out.begin(), out.end(),
                   [](const GuidedMode& a, const GuidedMode& b) { return a.n_eff > b.n_eff; });
  return out;
}

std::array<GuidedMode, kBasisSize> solve_vector_basis(const FiberSpec& f, double wavelength) {
  if (count_guided_lp_groups(f, wavelength) != 2)
    throw ConfigError("solve_vector_basis: fiber does not have the LP01+LP11 "
                      "two-group structure at this wavelength");
  auto he1 = family_roots(f, wavelength, ModeFamily::HE, 1);
  auto te = family_roots(f, wavelength, ModeFamily::TE, 0);
  auto tm = family_roots(f, wavelength, ModeFamily::TM, 0);
  auto he2 = family_roots(f, wavelength, ModeFamily::HE, 2);
  if (he1.size() != 1 || te.size() != 1 || tm.size() != 1 || he2.size() != 1)
    throw NumericError("solve_vector_basis: unexpected root multiplicity");
  std::array<GuidedMode, kBasisSize> basis = {
      make_mode(f, wavelength, ModeFamily::HE, 1, 1, 0, he1[0]), // HE11x
      make_mode(f, wavelength, ModeFamily::HE, 1, 1, 1, he1[0]), // HE11y
      make_mode(f, wavelength, ModeFamily::TE, 0, 1, 0, te[0]),  // TE01
      make_mode(f, wavelength, ModeFamily::TM, 0, 1, 0, tm[0]),  // TM01
      make_mode(f, wavelength, ModeFamily::HE, 2, 1, 1, he2[0]), // HE21a
      make_mode(f, wavelength, ModeFamily::HE, 2, 1, 0, he2[0]), // HE21b
  };
  for (int i = 0; i < kBasisSize; ++i) basis[i].label = kBasisLabels[i];
  for (const auto& m : basis)
    if (!(m.char_residual() < 1e-10))
      throw NumericError("solve_vector_basis: residual check failed for " + m.label);
  return basis;
}

GuidedMode solve_fundamental(const FiberSpec& f, double wavelength) {
  f.validate();
  f.check_wavelength(wavelength);
  auto roots = family_roots(f, wavelength, ModeFamily::HE, 1);
  if (roots.empty()) throw NumericError("solve_fundamental: no HE11 root found");
  return make_mode(f, wavelength, ModeFamily::HE, 1, 1, 0, roots[0]);
}

double beat_length(const GuidedMode& a, const GuidedMode& b) {
  if (std::abs(a.wavelength - b.wavelength) > 1e-15)
    throw ConfigError("beat_length: modes solved at different wavelengths");
  double d = std::abs(a.n_eff - b.n_eff);
  if (d < 1e-13)
    throw NumericError("beat_length: degenerate mode pair " + a.label + "/" + b.label);
  return a.wavelength / d;
}

double mode_group_index(const FiberSpec& f, double wavelength, const GuidedMode& proto) {
  const double dl = 0.1e-9;
  auto n_eff_at = [&](double lam) {
    auto roots = family_roots(f, lam, proto.family, proto.nu);
    if (int(roots.size()) < proto.radial)
      throw NumericError("mode_group_index: branch lost at shifted wavelength");
    return n_eff_from_u(f, lam, roots[proto.radial - 1]);
  };
  double np = n_eff_at(wavelength + dl), nm = n_eff_at(wavelength - dl);
  double dneff = (np - nm) / (2.0 * dl);
  return proto.n_eff - wavelength * dneff;
}

WalkOff walk_off(const FiberSpec& f, double lambda_signal, double lambda_pump) {
  WalkOff wo;
  if (!f.dispersive) return wo; // no material model: flagged zero
  GuidedMode fs = solve_fundamental(f, lambda_signal);
  GuidedMode fp = solve_fundamental(f, lambda_pump);
  double ngs = mode_group_index(f, lambda_signal, fs);
  double ngp = mode_group_index(f, lambda_pump, fp);
  wo.value = (ngs - ngp) / kSpeedOfLight;
  wo.dispersive = true;
  return wo;
}

double overlap_integral(const GuidedMode& a, const GuidedMode& b) {
  if (std::abs(a.core_radius - b.core_radius) > 1e-15)
    throw ConfigError("overlap_integral: modes from different fiber geometries");
  const int nphi = 64;
  const double dphi = 2.0 * kPi / nphi;
  double wmin = std::max(std::min(a.w, b.w), 0.25);
  double rmax = a.core_radius * std::min(1.0 + 34.0 / wmin, 400.0);
  auto ring = [&](const GuidedMode& m, double r, double* buf) {
    for (int k = 0; k < nphi; ++k)
      buf[k] = mode_intensity(m, r * std::cos(k * dphi), r * std::sin(k * dphi));
  };
  using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto integ = [&](const std::function<double(double)>& fn) {
    return gk::integrate(fn, 0.0, rmax, 12, 1e-7);
  };
  double ia_buf[nphi], ib_buf[nphi];
  double iaa = integ([&](double r) {
    ring(a, r, ia_buf);
    double s = 0;
    for (int k = 0; k < nphi; ++k) s += ia_buf[k];
    return r * s * dphi;
  });
  double ibb = integ([&](double r) {
    ring(b, r, ib_buf);
    double s = 0;
    for (int k = 0; k < nphi; ++k) s += ib_buf[k];
    return r * s * dphi;
  });
  double iab = integ([&](double r) {
    ring(a, r, ia_buf);
    ring(b, r, ib_buf);
    double s = 0;
    for (int k = 0; k < nphi; ++k) s += ia_buf[k] * ib_buf[k];
    return r * s * dphi;
  });
  if (!(iaa > 0) || !(ibb > 0) || !std::isfinite(iaa) || !std::isfinite(ibb) ||
      !std::isfinite(iab))
    throw NumericError("overlap_integral: non-normalizable mode field");
  return iab / (iaa * ibb);
}

double effective_area(const GuidedMode& m) { return 1.0 / overlap_integral(m, m); }

} // namespace fmk
