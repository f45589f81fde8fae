#pragma once

#include <vector>

#include "planarvac/types.hpp"

namespace planarvac {

// sqrt(a^2 - 1/4); domain error for a <= 1/2.
double sigma0(double a);

// All channels with nu < a at zero flux; domain error if mu_flux has a
// fractional part (only the pure Coulomb problem is defined here).
std::vector<Channel> supercritical_channels(const CoulombSystem& sys);

// Log-periodic channel factor; supercritical channels only.
Complex omega_minus(const CoulombSystem& sys, const Channel& ch, double r);

// Massless induced density summed over all supercritical channels,
// density_re in units of e per area; the imaginary part is kept as a
// diagnostic, never discarded.
SupercriticalDensityPoint density_general(const CoulombSystem& sys, double r);

// Closed two-channel form valid for 1/2 < a < 3/2; agrees with
// density_general wherever both are defined.
SupercriticalDensityPoint density_window(const CoulombSystem& sys, double r);

// Phase of the window formula as a function of the coupling; summed series
// with tail correction, equal (mod 2 pi) to the arg of the Gamma-ratio
// amplitude.
double window_phase(double a);

// -(2 sigma0/pi) ln(r/r0) in units of e0; the charge between r0 and r in
// the small-sigma0 regime.
double annulus_charge(double a, double r0, double r);

// dg/dln(r/r0) = -(2 e0^2/pi) sqrt(g^2 - 1/4), integrated through the
// given radii (r_grid[0] must be r0, increasing), clamped at g = 1/2;
// r_star reports the clamp radius when reached.
RGFlowResult rg_flow(double g0, double e0_sq, double r0,
                     const std::vector<double>& r_grid);

}  // namespace planarvac
