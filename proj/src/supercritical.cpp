#include "planarvac/supercritical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "planarvac/dirac.hpp"
#include "planarvac/errors.hpp"
#include "planarvac/series.hpp"
#include "planarvac/specfun.hpp"

namespace planarvac {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEuler = 0.577215664901532861;
constexpr Complex kI{0.0, 1.0};

void require_massless(const CoulombSystem& sys, const char* who) {
  if (sys.m != 0.0)
    throw DomainError(std::string(who) + ": requires m = 0");
}

}  // namespace

double sigma0(double a) {
  if (!(a > 0.5)) throw DomainError("sigma0: requires a > 1/2");
  return std::sqrt(a * a - 0.25);
}

std::vector<Channel> supercritical_channels(const CoulombSystem& sys) {
  if (sys.flux_alpha() != 0.0)
    throw DomainError(
        "supercritical_channels: flux must be integer (pure Coulomb)");
  std::vector<Channel> out;
  for (int s : {1, -1}) {
    const int lmin = (int)std::floor(-sys.a - sys.mu_flux - 0.5 * s) - 1;
    const int lmax = (int)std::ceil(sys.a - sys.mu_flux - 0.5 * s) + 1;
    for (int l = lmin; l <= lmax; ++l) {
      Channel ch = make_channel(sys, l, s);
      if (ch.nu < sys.a) out.push_back(ch);
    }
  }
  return out;
}

Complex omega_minus(const CoulombSystem& sys, const Channel& ch, double r) {
  if (ch.regime != Regime::Supercritical)
    throw DomainError("omega_minus: channel must be supercritical");
  if (!(r > 0.0)) throw DomainError("omega_minus: requires r > 0");
  const double sig = ch.sigma();
  const double s = ch.s;
  const Complex phase =
      std::exp(2.0 * kI * (sys.theta + sig * std::log(sys.E0 * r)));
  const Complex t1 = (ch.nu - kI * sys.a + kI * s * sig) /
                     (ch.nu - kI * sys.a - kI * s * sig);
  const Complex t2 = std::exp(ln_gamma(2.0 * kI * sig) -
                              ln_gamma(-2.0 * kI * sig));
  const Complex t3 = std::exp(
      ln_gamma(-kI * sig + 0.5 * (1.0 - s) + kI * sys.a) -
      ln_gamma(kI * sig + 0.5 * (1.0 - s) + kI * sys.a));
  return 1.0 - phase * t1 * t2 * t3;
}

SupercriticalDensityPoint density_general(const CoulombSystem& sys,
                                          double r) {
  require_massless(sys, "density_general");
  if (!(r > 0.0)) throw DomainError("density_general: requires r > 0");
  std::vector<Channel> chans = supercritical_channels(sys);
  if (chans.empty())
    throw DomainError("density_general: no supercritical channel (a too small)");
  CompensatedSumC sum;
  SupercriticalDensityPoint pt;
  pt.r = r;
  for (const Channel& ch : chans) {
    const double sig = ch.sigma();
    sum.add(sig / omega_minus(sys, ch, r));
    pt.channels.push_back({ch.l, ch.s, sig});
  }
  const double norm = 1.0 / (2.0 * kPi * kPi * r * r);
  pt.density_re = norm * sum.value().real();
  pt.density_im = norm * sum.value().imag();
  return pt;
}

double window_phase(double a) {
  const double s0 = sigma0(a);
  const int n_max = 100000;
  CompensatedSum sum;
  for (int n = 1; n <= n_max; ++n) {
    const double t = 2.0 * s0 / n;
    sum.add(t - 2.0 * std::atan(t) +
            std::atan(2.0 * n * s0 / ((double)n * n + 0.25)));
  }
  // remaining terms decay like (8 sigma0^3/3 - sigma0/2) / n^3
  const double zeta3_tail = -0.5 * polygamma_real(2, (double)n_max + 1.0);
  const double tail = (8.0 * s0 * s0 * s0 / 3.0 - 0.5 * s0) * zeta3_tail;
  return -kPi - 2.0 * kEuler * s0 + sum.value() + tail;
}

namespace {

double cached_window_phase(double a) {
  static std::map<double, double> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(a);
  if (it != cache.end()) return it->second;
  const double psi = window_phase(a);
  cache.emplace(a, psi);
  return psi;
}

}  // namespace

SupercriticalDensityPoint density_window(const CoulombSystem& sys, double r) {
  require_massless(sys, "density_window");
  if (!(sys.a > 0.5 && sys.a < 1.5))
    throw DomainError("density_window: requires 1/2 < a < 3/2");
  if (!(r > 0.0)) throw DomainError("density_window: requires r > 0");
  const double a = sys.a;
  const double s0 = sigma0(a);
  const double z = 2.0 * (a - s0) / a;
  const double v = (a - s0) / (a + s0);
  const Complex A =
      std::exp(ln_gamma(2.0 * kI * s0) + ln_gamma(kI * (a - s0)) -
               ln_gamma(-2.0 * kI * s0) - ln_gamma(kI * (a + s0)));
  const double abs_a = std::abs(A);
  const double phi = 2.0 * sys.theta + 2.0 * s0 * std::log(sys.E0 * r) +
                     cached_window_phase(a);
  const Complex w = std::exp(kI * phi);
  const Complex num = 2.0 - abs_a * z * w;
  const Complex den = 1.0 - abs_a * z * w + abs_a * abs_a * v * w * w;
  SupercriticalDensityPoint pt;
  pt.r = r;
  pt.density_re = s0 / (kPi * kPi * r * r) * (num / den).real();
  pt.density_im = 0.0;
  for (const Channel& ch : supercritical_channels(sys))
    pt.channels.push_back({ch.l, ch.s, ch.sigma()});
  return pt;
}

double annulus_charge(double a, double r0, double r) {
  const double s0 = sigma0(a);
  if (!(r0 > 0.0)) throw DomainError("annulus_charge: requires r0 > 0");
  if (!(r >= r0)) throw DomainError("annulus_charge: requires r >= r0");
  if (r == r0) return 0.0;
  return -2.0 * s0 / kPi * std::log(r / r0);
}

namespace {

// The flow dg/dt = -rate * sqrt(g^2 - 1/4) touches g = 1/2 tangentially,
// which makes the crossing time ill-conditioned in g alone.  Track the
// auxiliary variable w = sqrt(g^2 - 1/4) as an independent state: the pair
// obeys g' = -rate*w, w' = -rate*g, preserves g^2 - w^2 = 1/4 exactly, and
// w passes through zero linearly at the crossing.
struct FlowState {
  double g;
  double w;
};

FlowState flow_rhs(const FlowState& y, double rate) {
  return {-rate * y.w, -rate * y.g};
}

FlowState axpy(const FlowState& y, double h, double c1, const FlowState& k1,
               double c2 = 0, const FlowState& k2 = {0, 0}, double c3 = 0,
               const FlowState& k3 = {0, 0}, double c4 = 0,
               const FlowState& k4 = {0, 0}, double c5 = 0,
               const FlowState& k5 = {0, 0}, double c6 = 0,
               const FlowState& k6 = {0, 0}) {
  return {y.g + h * (c1 * k1.g + c2 * k2.g + c3 * k3.g + c4 * k4.g +
                     c5 * k5.g + c6 * k6.g),
          y.w + h * (c1 * k1.w + c2 * k2.w + c3 * k3.w + c4 * k4.w +
                     c5 * k5.w + c6 * k6.w)};
}

struct StepResult {
  FlowState y;
  double err;
};

StepResult cash_karp_step(const FlowState& y, double h, double rate) {
  const FlowState k1 = flow_rhs(y, rate);
  const FlowState k2 = flow_rhs(axpy(y, h, 1.0 / 5.0, k1), rate);
  const FlowState k3 =
      flow_rhs(axpy(y, h, 3.0 / 40.0, k1, 9.0 / 40.0, k2), rate);
  const FlowState k4 = flow_rhs(
      axpy(y, h, 3.0 / 10.0, k1, -9.0 / 10.0, k2, 6.0 / 5.0, k3), rate);
  const FlowState k5 =
      flow_rhs(axpy(y, h, -11.0 / 54.0, k1, 5.0 / 2.0, k2, -70.0 / 27.0, k3,
                    35.0 / 27.0, k4),
               rate);
  const FlowState k6 =
      flow_rhs(axpy(y, h, 1631.0 / 55296.0, k1, 175.0 / 512.0, k2,
                    575.0 / 13824.0, k3, 44275.0 / 110592.0, k4,
                    253.0 / 4096.0, k5),
               rate);
  const FlowState y5 = axpy(y, h, 37.0 / 378.0, k1, 0.0, k2, 250.0 / 621.0,
                            k3, 125.0 / 594.0, k4, 0.0, k5, 512.0 / 1771.0,
                            k6);
  const FlowState y4 =
      axpy(y, h, 2825.0 / 27648.0, k1, 0.0, k2, 18575.0 / 48384.0, k3,
           13525.0 / 55296.0, k4, 277.0 / 14336.0, k5, 1.0 / 4.0, k6);
  const double err =
      std::max(std::abs(y5.g - y4.g), std::abs(y5.w - y4.w));
  return {y5, err};
}

FlowState integrate_flow(FlowState y, double t, double t_end, double rate) {
  const double tol = 1e-12;
  double h = (t_end - t) / 8.0;
  int guard = 0;
  while (t < t_end) {
    if (++guard > 2000000)
      throw ConvergenceError(
          "rg_flow: step budget exhausted at tolerance 1e-12");
    h = std::min(h, t_end - t);
    StepResult st = cash_karp_step(y, h, rate);
    const double scale =
        tol * (std::max(std::abs(y.g), std::abs(y.w)) + 1.0);
    if (st.err <= scale || h < 1e-14 * (std::abs(t_end) + 1.0)) {
      t += h;
      y = st.y;
      if (st.err > 0.0)
        h *= std::min(5.0, 0.9 * std::pow(scale / st.err, 0.2));
      else
        h *= 5.0;
    } else {
      h *= std::max(0.1, 0.9 * std::pow(scale / st.err, 0.25));
    }
  }
  return y;
}

}  // namespace

RGFlowResult rg_flow(double g0, double e0_sq, double r0,
                     const std::vector<double>& r_grid) {
  if (!(g0 >= 0.5)) throw DomainError("rg_flow: requires g0 >= 1/2");
  if (!(e0_sq >= 0.0)) throw DomainError("rg_flow: requires e0_sq >= 0");
  if (!(r0 > 0.0)) throw DomainError("rg_flow: requires r0 > 0");
  if (r_grid.empty()) throw DomainError("rg_flow: empty radius grid");
  if (std::abs(r_grid.front() - r0) > 1e-12 * r0)
    throw DomainError("rg_flow: r_grid[0] must equal r0");
  for (size_t i = 1; i < r_grid.size(); ++i)
    if (!(r_grid[i] > r_grid[i - 1]))
      throw DomainError("rg_flow: r_grid must be strictly increasing");

  const double rate = 2.0 * e0_sq / kPi;
  RGFlowResult out;
  out.states.reserve(r_grid.size());
  if (g0 == 0.5 || e0_sq == 0.0) {
    for (double r : r_grid) out.states.push_back({g0, std::log(r / r0)});
    if (g0 == 0.5) out.r_star = r_grid.front();
    return out;
  }

  FlowState y{g0, std::sqrt(g0 * g0 - 0.25)};
  bool clamped = false;
  double t_prev = 0.0;
  for (double r : r_grid) {
    const double t = std::log(r / r0);
    if (!clamped && t > t_prev) {
      const FlowState y_prev = y;
      y = integrate_flow(y, t_prev, t, rate);
      if (y.w <= 0.0) {
        // the crossing lies inside (t_prev, t]; bisect on the sign of w
        double lo = t_prev, hi = t;
        for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
          const double mid = 0.5 * (lo + hi);
          const FlowState ym = integrate_flow(y_prev, t_prev, mid, rate);
          (ym.w > 0.0 ? lo : hi) = mid;
        }
        out.r_star = r0 * std::exp(0.5 * (lo + hi));
        clamped = true;
        y = {0.5, 0.0};
      }
    }
    out.states.push_back({clamped ? 0.5 : y.g, t});
    t_prev = t;
  }
  return out;
}

}  // namespace planarvac
