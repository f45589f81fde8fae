#pragma once

#include "planarvac/types.hpp"

namespace planarvac {

// Principal-branch log-Gamma for complex argument. Pole error at
// nonpositive integers.
Complex ln_gamma(Complex z);

// Gamma itself; overflow error instead of Inf.
Complex gamma_fn(Complex z);

// psi(z) = d/dz ln Gamma(z). Pole error at nonpositive integers.
Complex digamma(Complex z);

// psi'(x), real x > 0.
double trigamma(double x);

// psi^(k)(x) for real x > 0, k in [1, 6]. Orders above 1 feed the series
// tail corrections; order 1 agrees with trigamma.
double polygamma_real(int order, double x);

// Whittaker pair on the positive real axis. M has a parameter pole at
// 2*mu in {-1, -2, ...}; both report overflow instead of returning Inf.
Complex whittaker_M(Complex kappa, Complex mu, double x);
Complex whittaker_W(Complex kappa, Complex mu, double x);

// Modified Bessel I and its derivative, order >= 0, x >= 0.
double bessel_I(double order, double x);
double bessel_I_prime(double order, double x);

namespace detail {
// Kummer U(a, b, x) for x > 0; shared by whittaker_W and exposed for tests.
Complex hyperu(Complex a, Complex b, double x);
}  // namespace detail

}  // namespace planarvac
