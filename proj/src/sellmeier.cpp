#include "sellmeier.hpp"

#include <cmath>

#include "errors.hpp"

namespace fmk {

namespace {
constexpr double kB[3] = {0.6961663, 0.4079426, 0.8974794};
constexpr double kL[3] = {0.0684043, 0.1162414, 9.896161}; // um
} // namespace

double silica_index(double wavelength) {
  double lu = wavelength * 1e6;
  if (!(lu > 0.21 && lu < 3.7))
    throw NumericError("silica_index: wavelength outside Sellmeier validity range");
  double l2 = lu * lu;
  double n2 = 1.0;
  for (int i = 0; i < 3; ++i) n2 += kB[i] * l2 / (l2 - kL[i] * kL[i]);
  return std::sqrt(n2);
}

double silica_index_derivative(double wavelength) {
  double lu = wavelength * 1e6;
  double l2 = lu * lu;
  double n = silica_index(wavelength);
  // d(n^2)/dl = sum_i -2 B_i C_i l / (l^2 - C_i)^2 with C_i = L_i^2, l in um
  double dn2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    double c = kL[i] * kL[i];
    double d = l2 - c;
    dn2 += -2.0 * kB[i] * c * lu / (d * d);
  }
  return dn2 / (2.0 * n) * 1e6; // per meter
}

double silica_group_index(double wavelength) {
  return silica_index(wavelength) - wavelength * silica_index_derivative(wavelength);
}

} // namespace fmk
