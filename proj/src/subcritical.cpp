#include "planarvac/subcritical.hpp"

#include "planarvac/table.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "planarvac/errors.hpp"
#include "planarvac/series.hpp"
#include "planarvac/specfun.hpp"

namespace planarvac {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr Complex kI{0.0, 1.0};

void check_window(double a, double alpha, const char* who) {
  if (!(std::abs(alpha) < 0.5))
    throw DomainError(std::string(who) + ": requires |alpha| < 1/2");
  if (!(std::abs(a) < 0.5 - std::abs(alpha)))
    throw DomainError(std::string(who) +
                      ": requires |a| < 1/2 - |alpha| (subcritical window)");
}

// Integral-comparison bound for a tail decaying like x^-p, with p measured
// from the last stretch of terms.
double raw_tail_estimate(double t_old, double t_new, double x_old,
                         double x_new) {
  const double at_new = std::abs(t_new);
  if (at_new < 1e-300) return 0.0;
  double p = 2.0;
  const double at_old = std::abs(t_old);
  if (at_old > 0.0 && at_old > at_new)
    p = std::log(at_old / at_new) / std::log(x_new / x_old);
  p = std::clamp(p, 1.5, 8.0);
  return at_new * x_new / (p - 1.0);
}

// Hurwitz zeta(2k, y) for k = 1..3 via polygamma, plus the k = 4 magnitude
// as the error estimate of the accelerated tail.
struct ZetaTail {
  double correction;
  double estimate;
};

ZetaTail bernoulli_tail(double y, double alpha) {
  const double yp = y + alpha, ym = y - alpha;
  const double z2 = polygamma_real(1, yp) + polygamma_real(1, ym);
  const double z4 =
      (polygamma_real(3, yp) + polygamma_real(3, ym)) / 6.0;
  const double z6 =
      (polygamma_real(5, yp) + polygamma_real(5, ym)) / 120.0;
  const double k1 = (1.0 / 6.0) * z2;
  const double k2 = (-1.0 / 30.0) * z4;
  const double k3 = (1.0 / 42.0) * z6;
  const double z8 = 1.0 / (7.0 * std::pow(yp, 7)) + 0.5 / std::pow(yp, 8) +
                    1.0 / (7.0 * std::pow(ym, 7)) + 0.5 / std::pow(ym, 8);
  ZetaTail t;
  t.correction = k1 + k2 + k3;
  t.estimate = (1.0 / 30.0) * z8;
  return t;
}

struct SeriesOut {
  double value;
  double tail;
  int l_used;
};

double q1_term(double x, double alpha) {
  return (x + alpha) * trigamma(x + alpha) + (x - alpha) * trigamma(x - alpha) -
         2.0 - x / (x * x - alpha * alpha);
}

SeriesOut q1_series(double a, double alpha, const SeriesControl& ctl) {
  const double scale = std::abs(2.0 * a / kPi);
  CompensatedSum sum;
  double t_prev = 0.0, x_prev = 0.0;
  for (int l = 0; l < ctl.l_max; ++l) {
    const double x = l + 0.5;
    const double t = q1_term(x, alpha);
    sum.add(t);
    const bool checkpoint = l >= 12 && (l % 8 == 0 || l == ctl.l_max - 1);
    if (checkpoint) {
      if (ctl.accel == TailAccel::RichardsonTail) {
        ZetaTail zt = bernoulli_tail(x + 1.0, alpha);
        if (scale * zt.estimate <= ctl.tail_tol) {
          return {2.0 * a / kPi * (sum.value() + zt.correction),
                  scale * zt.estimate, l + 1};
        }
      } else {
        const double est = raw_tail_estimate(t_prev, t, x_prev, x);
        if (scale * est <= ctl.tail_tol)
          return {2.0 * a / kPi * sum.value(), scale * est, l + 1};
      }
      t_prev = t;
      x_prev = x;
    }
  }
  throw ConvergenceError(
      "q1: tail estimate above tolerance " + format_double(ctl.tail_tol) +
      " after " + std::to_string(ctl.l_max) + " terms");
}

double qr_term(double a, double x, double alpha) {
  const double xp = x + alpha, xm = x - alpha;
  const double gp = std::sqrt(xp * xp - a * a);
  const double gm = std::sqrt(xm * xm - a * a);
  const Complex wp = gp - kI * a;
  const Complex wm = gm - kI * a;
  Complex z = ln_gamma(wp) + ln_gamma(wm) + 0.5 * std::log(wp * wm) -
              (wp * digamma(wp) + wm * digamma(wm)) +
              kI * a * x / (x * x - alpha * alpha) -
              kI * a * (xp * trigamma(xp) + xm * trigamma(xm));
  return z.imag();
}

SeriesOut qr_series(double a, double alpha, const SeriesControl& ctl) {
  const double scale = 2.0 / kPi;
  CompensatedSum sum;
  double t_prev = 0.0, x_prev = 0.0;
  for (int l = 0; l < ctl.l_max; ++l) {
    const double x = l + 0.5;
    const double t = qr_term(a, x, alpha);
    sum.add(t);
    const bool checkpoint = l >= 12 && (l % 8 == 0 || l == ctl.l_max - 1);
    if (checkpoint) {
      const double est = raw_tail_estimate(t_prev, t, x_prev, x);
      if (scale * est <= ctl.tail_tol)
        return {scale * sum.value(), scale * est, l + 1};
      t_prev = t;
      x_prev = x;
    }
  }
  throw ConvergenceError(
      "qr: tail estimate above tolerance " + format_double(ctl.tail_tol) +
      " after " + std::to_string(ctl.l_max) + " terms");
}

}  // namespace

double q1(double a, double alpha, const SeriesControl& ctl) {
  check_window(a, alpha, "q1");
  return q1_series(a, alpha, ctl).value;
}

double qr(double a, double alpha, const SeriesControl& ctl) {
  check_window(a, alpha, "qr");
  return qr_series(a, alpha, ctl).value;
}

InducedCharge q_ind(double a, double alpha, const SeriesControl& ctl) {
  check_window(a, alpha, "q_ind");
  SeriesOut s1 = q1_series(a, alpha, ctl);
  SeriesOut sr = qr_series(a, alpha, ctl);
  InducedCharge q;
  q.q1 = s1.value;
  q.qr = sr.value;
  q.total = s1.value + sr.value;
  q.tail_estimate = s1.tail + sr.tail;
  q.l_used = std::max(s1.l_used, sr.l_used);
  return q;
}

double effective_coupling_subcritical(double a_bare, double e0_sq,
                                      const SeriesControl& ctl) {
  if (!(a_bare > 0.0))
    throw DomainError("effective_coupling_subcritical: requires a_bare > 0");
  if (!(e0_sq >= 0.0))
    throw DomainError("effective_coupling_subcritical: requires e0_sq >= 0");
  double x = std::min(a_bare, 0.499);
  for (int it = 0; it < 500; ++it) {
    const double charge = q1(x, 0.0, ctl) + qr(x, 0.0, ctl);
    const double target = a_bare - e0_sq * charge;
    if (target >= 0.5)
      throw SupercriticalExcursionError(
          "effective_coupling_subcritical: iterate reached a = 1/2");
    const double next = 0.5 * x + 0.5 * target;
    if (next >= 0.5)
      throw SupercriticalExcursionError(
          "effective_coupling_subcritical: iterate reached a = 1/2");
    if (std::abs(next - x) < 1e-12) {
      x = next;
      const double resid =
          x - (a_bare - e0_sq * (q1(x, 0.0, ctl) + qr(x, 0.0, ctl)));
      if (std::abs(resid) > 1e-10)
        throw ConvergenceError(
            "effective_coupling_subcritical: fixed point residual " +
            format_double(resid) + " above tolerance 1e-10");
      return x;
    }
    x = next;
  }
  throw ConvergenceError(
      "effective_coupling_subcritical: no fixed point after 500 damped "
      "iterations at tolerance 1e-12");
}

}  // namespace planarvac
