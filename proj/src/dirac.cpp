#include "planarvac/dirac.hpp"

#include <cmath>
#include <vector>

#include "planarvac/errors.hpp"
#include "planarvac/specfun.hpp"

namespace planarvac {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr Complex kI{0.0, 1.0};

struct BoundKinematics {
  double lambda;   // sqrt(m^2 - E^2)
  double x;        // 2 lambda r
  int s_eff;       // sign after folding nu_signed < 0 onto nu > 0
  bool flip;       // lower component picks up a sign when folded
  Complex mu;      // gamma or i sigma
};

BoundKinematics bound_kinematics(const CoulombSystem& sys, const Channel& ch,
                                 double E, double r) {
  if (!(sys.m > 0.0))
    throw DomainError("radial doublet: requires m > 0");
  if (!(std::abs(E) < sys.m))
    throw DomainError("radial doublet: requires |E| < m");
  if (!(r > 0.0)) throw DomainError("radial doublet: requires r > 0");
  BoundKinematics k;
  k.lambda = std::sqrt((sys.m - E) * (sys.m + E));
  k.x = 2.0 * k.lambda * r;
  k.flip = ch.nu_signed < 0.0;
  k.s_eff = k.flip ? -ch.s : ch.s;
  k.mu = ch.regime == Regime::Subcritical ? Complex{ch.gamma(), 0.0}
                                          : Complex{0.0, ch.sigma()};
  return k;
}

}  // namespace

Channel make_channel(const CoulombSystem& sys, int l, int s) {
  if (s != 1 && s != -1) throw DomainError("make_channel: s must be +1 or -1");
  Channel ch;
  ch.l = l;
  ch.s = s;
  ch.nu_signed = l + sys.mu_flux + 0.5 * s;
  ch.nu = std::abs(ch.nu_signed);
  ch.gamma_sq = ch.nu * ch.nu - sys.a * sys.a;
  ch.regime =
      ch.gamma_sq >= 0.0 ? Regime::Subcritical : Regime::Supercritical;
  return ch;
}

RadialDoublet regular_solution(const CoulombSystem& sys, const Channel& ch,
                               double E, double r) {
  BoundKinematics k = bound_kinematics(sys, ch, E, r);
  const double ael = sys.a * E / k.lambda;
  const Complex kp{ael + 0.5 * k.s_eff, 0.0};
  const Complex km{ael - 0.5 * k.s_eff, 0.0};
  const Complex C =
      ((double)k.s_eff * k.mu - ael) / (ch.nu + sys.m * sys.a / k.lambda);
  const Complex Mp = whittaker_M(kp, k.mu, k.x);
  const Complex Mm = whittaker_M(km, k.mu, k.x);
  const double pre = 1.0 / std::sqrt(2.0 * k.lambda * k.x);
  RadialDoublet d;
  d.r = r;
  d.f = std::sqrt(sys.m + E) * pre * (Mp + C * Mm);
  d.g = std::sqrt(sys.m - E) * pre * (Mp - C * Mm);
  if (k.flip) d.g = -d.g;
  return d;
}

RadialDoublet irregular_solution(const CoulombSystem& sys, const Channel& ch,
                                 double E, double r) {
  BoundKinematics k = bound_kinematics(sys, ch, E, r);
  const double ael = sys.a * E / k.lambda;
  const Complex kp{ael + 0.5 * k.s_eff, 0.0};
  const Complex km{ael - 0.5 * k.s_eff, 0.0};
  const double base = sys.m * sys.a / k.lambda - k.s_eff * ch.nu;
  const double C = k.s_eff == 1 ? base : 1.0 / base;
  const Complex Wp = whittaker_W(kp, k.mu, k.x);
  const Complex Wm = whittaker_W(km, k.mu, k.x);
  const double pre = 1.0 / std::sqrt(2.0 * k.lambda * k.x);
  RadialDoublet d;
  d.r = r;
  d.f = std::sqrt(sys.m + E) * pre * (Wp + C * Wm);
  d.g = std::sqrt(sys.m - E) * pre * (Wp - C * Wm);
  if (k.flip) d.g = -d.g;
  return d;
}

double boundary_flux(const RadialDoublet& d) {
  return 2.0 * std::imag(std::conj(d.f) * d.g);
}

Complex wronskian(const CoulombSystem& sys, const Channel& ch, double E) {
  BoundKinematics k = bound_kinematics(sys, ch, E, 1.0);
  const double ael = sys.a * E / k.lambda;
  const Complex arg = k.mu + 0.5 - 0.5 * k.s_eff - ael;
  const Complex closed = -2.0 * std::exp(ln_gamma(2.0 * k.mu) - ln_gamma(arg)) *
                         (double)k.s_eff * k.mu /
                         (ch.nu + sys.m * sys.a / k.lambda);
  return k.flip ? -closed : closed;
}

SpectrumLevel bound_spectrum(const CoulombSystem& sys, int k, int l) {
  if (k < 0) throw DomainError("bound_spectrum: requires k >= 0");
  if (l < 0) throw DomainError("bound_spectrum: requires l >= 0");
  const double nu = l + 0.5;
  if (sys.a >= nu)
    throw DomainError("bound_spectrum: channel is supercritical");
  const double gamma = std::sqrt(nu * nu - sys.a * sys.a);
  const double t = k + gamma;
  SpectrumLevel lv;
  lv.k = k;
  lv.l = l;
  lv.s = 1;
  lv.energy_re = sys.m * t / std::sqrt(t * t + sys.a * sys.a);
  lv.width = 0.0;
  lv.kind = LevelKind::Bound;
  return lv;
}

double tau_massless(double a) {
  if (!(a > 0.0)) throw DomainError("tau_massless: requires a > 0");
  return 1.0 / (2.0 * a) + digamma(kI * a).imag() + kPi / 2.0;
}

SpectrumLevel resonance_spectrum_massless(const CoulombSystem& sys, int k) {
  if (sys.m != 0.0)
    throw DomainError("resonance_spectrum_massless: requires m = 0");
  if (k < 0)
    throw DomainError("resonance_spectrum_massless: requires k >= 0");
  if (!(sys.a > 0.5))
    throw DomainError(
        "resonance_spectrum_massless: requires a > 1/2 (no diving channel)");
  const double s0 = std::sqrt(sys.a * sys.a - 0.25);
  const double tau = tau_massless(sys.a);
  const double coth = 1.0 / std::tanh(kPi * sys.a);
  const double mag =
      sys.E0 * std::abs(std::cos(tau)) *
      std::exp(-k / (2.0 * s0) + sys.theta / s0 +
               kPi * coth / (2.0 * sys.a));
  SpectrumLevel lv;
  lv.k = k;
  lv.l = 0;
  lv.s = 1;
  lv.energy_re = -mag;
  lv.width = std::abs(std::tan(tau)) * mag;
  lv.kind = LevelKind::Resonance;
  return lv;
}

namespace {

double dived_phase(const CoulombSystem& sys, double eps) {
  const double a = sys.a;
  const double s0 = std::sqrt(a * a - 0.25);
  const double z = std::sqrt(sys.m * a * a / (2.0 * eps));
  return std::arg(gamma_fn(2.0 * kI * s0)) -
         s0 * digamma(-kI * z).real() -
         0.5 * s0 * std::log(8.0 * eps / sys.m) +
         std::atan(s0 * (1.0 - 2.0 * a * a * eps / sys.m)) + sys.theta;
}

void check_dived_domain(const CoulombSystem& sys) {
  if (!(sys.m > 0.0))
    throw DomainError("solve_dived_resonance: requires m > 0");
  if (!(sys.a > 0.5))
    throw DomainError(
        "solve_dived_resonance: requires a > 1/2 (no diving channel)");
}

}  // namespace

double dived_resonance_residual(const CoulombSystem& sys, double eps) {
  check_dived_domain(sys);
  if (!(eps > 0.0))
    throw DomainError("dived_resonance_residual: requires eps > 0");
  return dived_phase(sys, eps);
}

SpectrumLevel solve_dived_resonance(const CoulombSystem& sys) {
  check_dived_domain(sys);
  const int n = 481;
  const double lo = 1e-12, hi = 1.0;  // eps/m
  double best_abs = 1e300;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  double prev_e = 0.0, prev_v = 0.0;
  bool have = false;
  for (int i = 0; i < n; ++i) {
    const double e =
        sys.m * lo * std::pow(hi / lo, (double)i / (double)(n - 1));
    const double v = dived_phase(sys, e);
    best_abs = std::min(best_abs, std::abs(v));
    if (have && ((v > 0.0) != (prev_v > 0.0))) {
      bracket_lo = prev_e;  // keep the last (largest-eps) sign change
      bracket_hi = e;
    }
    prev_e = e;
    prev_v = v;
    have = true;
  }
  if (bracket_hi == 0.0)
    throw NoRootError("solve_dived_resonance: no sign change on [1e-12 m, m]; "
                      "min |residual| = " +
                      std::to_string(best_abs));
  double a_ = bracket_lo, b_ = bracket_hi;
  double fa = dived_phase(sys, a_);
  for (int i = 0; i < 200 && b_ - a_ > 1e-16 * b_; ++i) {
    const double mid = 0.5 * (a_ + b_);
    const double fm = dived_phase(sys, mid);
    if ((fm > 0.0) == (fa > 0.0)) {
      a_ = mid;
      fa = fm;
    } else {
      b_ = mid;
    }
  }
  const double eps = 0.5 * (a_ + b_);
  SpectrumLevel lv;
  lv.k = 0;
  lv.l = 0;
  lv.s = 1;
  lv.energy_re = -(sys.m + eps);
  lv.width =
      sys.m * std::exp(-std::sqrt(2.0 * sys.m * kPi * sys.a * sys.a / eps));
  lv.kind = LevelKind::Resonance;
  return lv;
}

namespace {

struct MapKernel {
  Complex K1, K2;
};

MapKernel map_kernel(const CoulombSystem& sys, const Channel& ch, double E) {
  if (ch.regime != Regime::Supercritical)
    throw DomainError("extension map: channel must be supercritical");
  BoundKinematics k = bound_kinematics(sys, ch, E, 1.0);
  const double sig = ch.sigma();
  const double s = k.s_eff;
  const double ael = sys.a * E / k.lambda;
  const double beta = ch.nu + sys.a * (sys.m + E) / k.lambda;
  MapKernel mk;
  mk.K1 = std::pow(Complex{2.0 * k.lambda / sys.E0, 0.0}, -2.0 * kI * sig) *
          ((beta + kI * s * sig) / (beta - kI * s * sig)) *
          std::exp(ln_gamma(2.0 * kI * sig) -
                   ln_gamma(0.5 - 0.5 * s - ael + kI * sig));
  mk.K2 = std::exp(ln_gamma(-2.0 * kI * sig) -
                   ln_gamma(0.5 - 0.5 * s - ael - kI * sig));
  return mk;
}

}  // namespace

double extension_map(const CoulombSystem& sys, const Channel& ch, double E,
                     Complex xi) {
  if (std::abs(xi) == 0.0)
    throw DomainError("extension_map: xi must be nonzero");
  MapKernel mk = map_kernel(sys, ch, E);
  double th = 0.5 * std::arg((1.0 / xi + mk.K2) / mk.K1);
  th = std::fmod(th, kPi);
  if (th < 0.0) th += kPi;
  return th;
}

Complex xi_from_theta(const CoulombSystem& sys, const Channel& ch, double E,
                      double theta) {
  MapKernel mk = map_kernel(sys, ch, E);
  return 1.0 / (std::exp(2.0 * kI * theta) * mk.K1 - mk.K2);
}

double ode_residual(const CoulombSystem& sys, const Channel& ch, double E,
                    const std::function<RadialDoublet(double)>& doublet_fn,
                    double r) {
  const double h = 1e-4 * r;
  auto deriv = [&](double step) {
    RadialDoublet m2 = doublet_fn(r - 2.0 * step);
    RadialDoublet m1 = doublet_fn(r - step);
    RadialDoublet p1 = doublet_fn(r + step);
    RadialDoublet p2 = doublet_fn(r + 2.0 * step);
    Complex df = (m2.f - 8.0 * m1.f + 8.0 * p1.f - p2.f) / (12.0 * step);
    Complex dg = (m2.g - 8.0 * m1.g + 8.0 * p1.g - p2.g) / (12.0 * step);
    return std::pair<Complex, Complex>{df, dg};
  };
  auto d1 = deriv(h);
  auto d2 = deriv(0.5 * h);
  const Complex fp = (16.0 * d2.first - d1.first) / 15.0;
  const Complex gp = (16.0 * d2.second - d1.second) / 15.0;
  RadialDoublet d = doublet_fn(r);
  const double s = ch.s;
  const double nt = ch.nu_signed;
  const Complex r1 =
      s * gp + (nt / r) * d.g + (sys.m - E - sys.a / r) * d.f;
  const Complex r2 =
      -s * fp + (nt / r) * d.f - (sys.m + E + sys.a / r) * d.g;
  const double norm =
      std::sqrt(std::norm(d.f) + std::norm(d.g));
  if (norm == 0.0) throw DomainError("ode_residual: zero doublet");
  return std::max(std::abs(r1), std::abs(r2)) / norm;
}

}  // namespace planarvac
