#pragma once

namespace fmk {

// Fused-silica refractive index, Malitson (1965) three-term Sellmeier fit.
// wavelength in meters, valid roughly 0.21-3.7 um.
double silica_index(double wavelength);

// Analytic dn/dlambda (per meter) of the same fit.
double silica_index_derivative(double wavelength);

// Bulk group index n_g = n - lambda * dn/dlambda.
double silica_group_index(double wavelength);

} // namespace fmk
