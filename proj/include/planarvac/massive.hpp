#pragma once

#include "planarvac/types.hpp"

namespace planarvac {

// First-order polarization at spacelike q^2, per unit e0^2:
// (1/8 pi)[(4 m^2 - q^2)/|q| arctan(|q|/2m) - 2m]; series branch near
// q = 0 keeps the analytic zero exact.
double polarization_operator(double q_sq, double m);

// -a Pi(q)/|q| per unit e0.
double induced_charge_momentum(double a, double q_abs, double m);

// Coordinate-space induced charge, units of e0:
// -a Int_1^inf dx e^{-2 m r x}/(x^3 sqrt(x^2-1)), endpoint regularized by
// x = cosh u before adaptive quadrature.
MassiveChargePoint q_m_coordinate(double a, double m, double r,
                                  double quad_tol);

// Asymptotic branches. Small: -a (pi/4 - c_fit m r), mr < 0.1. Large:
// -a P sqrt(1/(m r)) e^{-2 m r}, mr > 3, with P = sqrt(pi)/2 (derived,
// default) or sqrt(4 pi) (alternate normalization, 4x the derived one).
double q_m_small_r(double a, double m, double r, double c_fit);
double q_m_large_r(double a, double m, double r,
                   LargeRPrefactor prefactor = LargeRPrefactor::Derived);

// Least-squares slope of (pi/4 + q_m_coordinate/a) against m r over
// mr in [1e-3, 5e-2]; the c_fit the small branch wants.
double fit_small_r_coefficient(double m, double quad_tol);

// Real-vacuum-polarization density model: log-squared inner branch,
// stretched-exponential outer branch, switched where the magnitudes
// intersect; units of e0 m^2 at the given r.
double real_polarization_density(double a_cr, double m, double epsilon0,
                                 double r);

// m exp(-sqrt(2 m pi a^2/epsilon)).
double resonance_width(double a, double m, double epsilon);

// Order-of-magnitude composite Q_m(r) m^2 + j0_real(r); include_real=false
// drops the real-polarization part (subcritical configuration).
double total_massive_density(double a, double a_cr, double m, double epsilon0,
                             double r, bool include_real = true);

}  // namespace planarvac
