#pragma once

#include <functional>

#include "planarvac/types.hpp"

namespace planarvac {

Channel make_channel(const CoulombSystem& sys, int l, int s);

// Radial doublet (f, g) of the bound-region problem, |E| < m, r > 0.
// Regular solution ~ r^gamma at the origin, irregular decays like
// e^{-lambda r} at infinity. Normalization fixes both leading coefficients
// to 1.
RadialDoublet regular_solution(const CoulombSystem& sys, const Channel& ch,
                               double E, double r);
RadialDoublet irregular_solution(const CoulombSystem& sys, const Channel& ch,
                                 double E, double r);

// Radial probability current through radius d.r: 2 Im(conj(f) g).
// Identically zero for doublets with a common phase.
double boundary_flux(const RadialDoublet& d);

// Closed form of g_R f_I - f_R g_I for the doublets above; r-independent.
// Pole error exactly at the bound-state energies.
Complex wronskian(const CoulombSystem& sys, const Channel& ch, double E);

// E = m (k+gamma)/sqrt((k+gamma)^2 + a^2) with gamma = sqrt(nu^2 - a^2),
// nu = l + 1/2. Domain error when a >= nu.
SpectrumLevel bound_spectrum(const CoulombSystem& sys, int k, int l);

// Phase entering the massless resonance ladder: 1/(2a) + Im psi(ia) + pi/2.
double tau_massless(double a);

// Quasidiscrete ladder in the lowest supercritical channel for m = 0:
// |Re E| = E0 |cos tau| exp(-k/(2 sigma0) + theta/sigma0
//          + pi coth(pi a)/(2a)), forced into the hole sector,
// width = |tan tau| |Re E|. Valid guide only for sigma0 small.
SpectrumLevel resonance_spectrum_massless(const CoulombSystem& sys, int k);

// Level dived into the lower continuum for m > 0, a slightly above 1/2:
// solves the phase equation for eps > 0 on [1e-12 m, m] and returns
// energy_re = -(m + eps) with the tunneling width attached. No-root error
// when the bracket has no sign change.
SpectrumLevel solve_dived_resonance(const CoulombSystem& sys);

// Residual of the phase equation behind solve_dived_resonance, in equation
// units; exposed so callers can audit returned roots.
double dived_resonance_residual(const CoulombSystem& sys, double eps);

// Boundary-condition angle theta in [0, pi) for a given extension
// parameter xi in a supercritical channel at energy E, |E| < m.
double extension_map(const CoulombSystem& sys, const Channel& ch, double E,
                     Complex xi);

// Forward companion of extension_map; complex in general.
Complex xi_from_theta(const CoulombSystem& sys, const Channel& ch, double E,
                      double theta);

// Max component residual of the radial system applied to a sampled doublet,
// relative to the doublet norm. 5-point stencil, h = 1e-4 r, one Richardson
// step.
double ode_residual(const CoulombSystem& sys, const Channel& ch, double E,
                    const std::function<RadialDoublet(double)>& doublet_fn,
                    double r);

}  // namespace planarvac
