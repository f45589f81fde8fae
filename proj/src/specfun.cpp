#include "planarvac/specfun.hpp"

#include <cmath>
#include <limits>

#include "planarvac/errors.hpp"
#include "planarvac/series.hpp"

namespace planarvac {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(Complex z) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  return r <= 0.0 && r == std::floor(r);
}

// 14-term rational stage, exact for Re z >= 0.5.
Complex lanczos_ln_gamma(Complex z) {
  static const double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  Complex tmp = z + 5.24218750000000000;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  Complex ser{0.999999999999997092, 0.0};
  for (int j = 0; j < 14; ++j) ser += cof[j] / (z + (double)(j + 1));
  return tmp + std::log(2.5066282746310005 * ser / z);
}

// Bernoulli numbers B_2..B_14 over their indices as needed below.
constexpr double kB[7] = {1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
                          5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};

}  // namespace

Complex ln_gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw PoleError("ln_gamma: pole at nonpositive integer");
  if (z.real() >= 0.5) return lanczos_ln_gamma(z);
  // March right with principal logs; this reproduces the continuous branch
  // (checked against extended-precision references in the tests).
  int n = (int)std::ceil(0.5 - z.real());
  Complex shift{0.0, 0.0};
  for (int k = 0; k < n; ++k) shift += std::log(z + (double)k);
  return lanczos_ln_gamma(z + (double)n) - shift;
}

Complex gamma_fn(Complex z) {
  Complex lg = ln_gamma(z);
  if (lg.real() > 709.0) throw OverflowError("gamma: magnitude beyond double range");
  return std::exp(lg);
}

Complex digamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw PoleError("digamma: pole at nonpositive integer");
  // Shift until the asymptotic series applies, accumulating -1/(z+k).
  Complex acc{0.0, 0.0};
  Complex w = z;
  while (w.real() < 1.0 || std::abs(w) < 16.0) {
    acc -= 1.0 / w;
    w += 1.0;
  }
  Complex inv = 1.0 / w;
  Complex inv2 = inv * inv;
  Complex series{0.0, 0.0};
  Complex p = inv2;
  for (int k = 0; k < 7; ++k) {
    series += kB[k] / (2.0 * (k + 1)) * p;
    p *= inv2;
  }
  return acc + std::log(w) - 0.5 * inv - series;
}

double polygamma_real(int order, double x) {
  if (order < 1 || order > 6)
    throw DomainError("polygamma_real: order must be in [1, 6]");
  if (!(x > 0.0)) throw DomainError("polygamma_real: requires x > 0");
  const int k = order;
  double kfac = 1.0;
  for (int j = 2; j <= k; ++j) kfac *= j;
  // recurrence leftward contribution, then asymptotic at large x
  double shift_target = 10.0 + 2.0 * k;
  CompensatedSum acc;
  double w = x;
  double sgn = (k % 2 == 0) ? -1.0 : 1.0;  // sign of psi^(k) tail terms
  while (w < shift_target) {
    acc.add(sgn * kfac * std::pow(w, (double)(-k - 1)));
    w += 1.0;
  }
  // psi^(k)(w) ~ (-1)^(k-1) [ (k-1)!/w^k + k!/(2 w^{k+1})
  //   + sum_j B_{2j} (2j+k-1)!/(2j)! / w^{2j+k} ]
  double t = kfac / k * std::pow(w, (double)-k);
  t += kfac / 2.0 * std::pow(w, (double)(-k - 1));
  for (int j = 1; j <= 6; ++j) {
    // (2j+k-1)!/(2j)!
    double num = 1.0;
    for (int i = 2 * j + 1; i <= 2 * j + k - 1; ++i) num *= i;
    t += kB[j - 1] * num * std::pow(w, (double)(-2 * j - k));
  }
  acc.add(sgn * t);
  return acc.value();
}

double trigamma(double x) {
  if (!(x > 0.0)) throw DomainError("trigamma: requires x > 0");
  return polygamma_real(1, x);
}

namespace {

bool m_parameter_pole(Complex mu) {
  if (mu.imag() != 0.0) return false;
  double t = 2.0 * mu.real();
  return t <= -1.0 + 1e-13 && std::abs(t - std::round(t)) < 1e-12;
}

// Regularized confluent series sum 1F1(alpha; beta; x).
Complex kummer_m_series(Complex alpha, Complex beta, double x) {
  Complex term{1.0, 0.0};
  CompensatedSumC sum;
  sum.add(term);
  for (int j = 0; j < 20000; ++j) {
    term *= (alpha + (double)j) * x / ((beta + (double)j) * (double)(j + 1));
    sum.add(term);
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
      throw OverflowError("whittaker_M: series overflow");
    if (std::abs(term) < 1e-17 * std::abs(sum.value()) && j > 6)
      return sum.value();
  }
  throw ConvergenceError("whittaker_M: series did not converge");
}

}  // namespace

Complex whittaker_M(Complex kappa, Complex mu, double x) {
  if (!(x > 0.0)) throw DomainError("whittaker_M: requires x > 0");
  if (m_parameter_pole(mu))
    throw PoleError("whittaker_M: 2*mu at a negative integer");
  // magnitude estimate: M ~ e^{x/2} x^{kappa...}; refuse exponent blowups
  double logmag_bound = x / 2.0 + ((mu + 0.5) * std::log(x)).real();
  if (logmag_bound > 700.0)
    throw OverflowError("whittaker_M: magnitude beyond double range");
  Complex s = kummer_m_series(mu - kappa + 0.5, 2.0 * mu + 1.0, x);
  Complex v = std::exp(-x / 2.0 + (mu + 0.5) * std::log(Complex{x, 0.0})) * s;
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw OverflowError("whittaker_M: magnitude beyond double range");
  return v;
}

namespace {

// Laplace-type evaluation of U(a, b, x) for Re a >= 0.6:
// U = (1/Gamma(a)) Int_0^inf e^{-x t} t^{a-1} (1+t)^{b-a-1} dt, t = e^w.
// The transformed integrand exp(-x e^w + a w + c ln(1+e^w)) is analytic and
// bell-shaped on the real w-line, so the trapezoid rule converges
// geometrically.
Complex hyperu_integral(Complex a, Complex b, double x) {
  const Complex c = b - a - 1.0;
  const double ar = a.real(), cr = c.real();

  auto lse = [](double w) {  // ln(1 + e^w), stable
    return w > 35.0 ? w + std::exp(-w) : std::log1p(std::exp(w));
  };
  auto phi_re = [&](double w) {
    return -x * std::exp(w) + ar * w + cr * lse(w);
  };
  auto dphi_re = [&](double w) {
    return -x * std::exp(w) + ar + cr / (1.0 + std::exp(-w));
  };

  // peak: dphi decreasing from ar > 0 toward -infinity
  double lo = -60.0, hi = 10.0;
  while (dphi_re(hi) > 0.0) hi += 5.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (dphi_re(mid) > 0.0 ? lo : hi) = mid;
  }
  double wpk = 0.5 * (lo + hi);
  double pk = phi_re(wpk);

  double wlo = wpk;
  while (phi_re(wlo) > pk - 46.0 && wlo > -4000.0) wlo -= 1.0;
  double whi = wpk;
  while (phi_re(whi) > pk - 46.0 && whi < 200.0) whi += 0.5;

  auto kernel = [&](double w) {
    // exponent: -x e^w + a w + c L(w) - pk, with L(w) = ln(1+e^w) real
    Complex expo = a * w + c * lse(w) + Complex{-x * std::exp(w) - pk, 0.0};
    return std::exp(expo);
  };

  int n = 48;
  Complex prev{0.0, 0.0};
  Complex cur{0.0, 0.0};
  for (int iter = 0; iter < 9; ++iter, n *= 2) {
    double h = (whi - wlo) / n;
    CompensatedSumC s;
    s.add(0.5 * (kernel(wlo) + kernel(whi)));
    for (int i = 1; i < n; ++i) s.add(kernel(wlo + i * h));
    cur = s.value() * h;
    if (iter > 1 && std::abs(cur - prev) <= 1e-15 * std::abs(cur)) break;
    prev = cur;
  }
  return std::exp(Complex{pk, 0.0} + std::log(cur) - ln_gamma(a));
}

// Divergent large-x expansion with optimal truncation; valid only when the
// smallest term is negligible.
bool hyperu_asymptotic(Complex a, Complex b, double x, Complex* out) {
  Complex term{1.0, 0.0};
  CompensatedSumC sum;
  sum.add(term);
  double best = std::numeric_limits<double>::max();
  for (int n = 0; n < 60; ++n) {
    Complex next = term * (a + (double)n) * (a - b + 1.0 + (double)n) /
                   ((double)(n + 1) * (-x));
    if (std::abs(next) >= std::abs(term)) break;  // optimal point reached
    term = next;
    sum.add(term);
    best = std::abs(term);
    if (best < 1e-16 * std::abs(sum.value())) break;
  }
  if (best > 1e-13 * std::abs(sum.value())) return false;
  *out = std::pow(Complex{x, 0.0}, -a) * sum.value();
  return true;
}

Complex hyperu(Complex a, Complex b, double x) {
  if (x >= 40.0) {
    Complex v;
    if (hyperu_asymptotic(a, b, x, &v)) return v;
  }
  if (a.real() >= 0.6) return hyperu_integral(a, b, x);
  // shift into the convergent region, then recurse down (stable direction)
  int k = (int)std::ceil(0.6 - a.real());
  Complex u1 = hyperu_integral(a + (double)(k + 1), b, x);
  Complex u0 = hyperu_integral(a + (double)k, b, x);
  for (int j = 0; j < k; ++j) {
    Complex ac = a + (double)(k - j);
    Complex um = (2.0 * ac - b + x) * u0 - ac * (ac - b + 1.0) * u1;
    u1 = u0;
    u0 = um;
  }
  return u0;
}

}  // namespace

namespace detail {
Complex hyperu(Complex a, Complex b, double x) {
  return planarvac::hyperu(a, b, x);
}
}  // namespace detail

Complex whittaker_W(Complex kappa, Complex mu, double x) {
  if (!(x > 0.0)) throw DomainError("whittaker_W: requires x > 0");
  Complex u = hyperu(mu - kappa + 0.5, 2.0 * mu + 1.0, x);
  Complex v = std::exp(-x / 2.0 + (mu + 0.5) * std::log(Complex{x, 0.0})) * u;
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw OverflowError("whittaker_W: magnitude beyond double range");
  return v;
}

double bessel_I(double order, double x) {
  if (order < 0.0) throw DomainError("bessel_I: requires order >= 0");
  if (x < 0.0) throw DomainError("bessel_I: requires x >= 0");
  if (x == 0.0) return order == 0.0 ? 1.0 : 0.0;
  double t = std::exp(order * std::log(x / 2.0) -
                      ln_gamma(Complex{order + 1.0, 0.0}).real());
  CompensatedSum sum;
  sum.add(t);
  double q = x * x / 4.0;
  for (int j = 0; j < 2000; ++j) {
    t *= q / ((double)(j + 1) * ((double)j + order + 1.0));
    sum.add(t);
    if (t < 1e-17 * sum.value() && j > 4) break;
  }
  return sum.value();
}

double bessel_I_prime(double order, double x) {
  if (order < 0.0) throw DomainError("bessel_I_prime: requires order >= 0");
  if (x < 0.0) throw DomainError("bessel_I_prime: requires x >= 0");
  if (x == 0.0) {
    if (order == 0.0) return 0.0;
    if (order == 1.0) return 0.5;
    if (order > 1.0) return 0.0;
    throw DomainError("bessel_I_prime: derivative diverges at x = 0");
  }
  return bessel_I(order + 1.0, x) + (order / x) * bessel_I(order, x);
}

}  // namespace planarvac
