#pragma once

#include "planarvac/types.hpp"

namespace planarvac {

// Induced-charge series for massless fermions, all channels subcritical.
// Both pieces accept signed a and alpha with |a| < 1/2 - |alpha| so the
// parity statements (odd in a, even in alpha) are directly checkable;
// physical inputs are a > 0, 0 <= alpha < 1/2. Units of e throughout.
double q1(double a, double alpha, const SeriesControl& ctl = {});
double qr(double a, double alpha, const SeriesControl& ctl = {});

InducedCharge q_ind(double a, double alpha, const SeriesControl& ctl = {});

// Hartree fixed point a_eff = a_bare - e0_sq (q1(a_eff) + qr(a_eff)),
// damped iteration. Throws SupercriticalExcursionError if the iterate
// reaches 1/2.
double effective_coupling_subcritical(double a_bare, double e0_sq,
                                      const SeriesControl& ctl = {});

}  // namespace planarvac
