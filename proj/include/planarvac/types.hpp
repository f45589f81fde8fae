#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "planarvac/errors.hpp"

namespace planarvac {

using Complex = std::complex<double>;

enum class Regime { Subcritical, Supercritical };
enum class LevelKind { Bound, Resonance };
enum class TailAccel { None, RichardsonTail };
enum class MassiveRegime { Exact, SmallMr, LargeMr };
enum class LargeRPrefactor { Derived, TwoSqrtPi };

// A Coulomb center of dimensionless strength a with an optional AB flux
// mu_flux = n + alpha, a fermion mass m >= 0, the boundary-condition angle
// theta in [0, pi], and the energy scale E0 fixing the length unit.
struct CoulombSystem {
  double a = 0.0;
  double mu_flux = 0.0;
  double m = 0.0;
  double theta = 0.0;
  double E0 = 1.0;

  CoulombSystem(double a_, double mu_flux_, double m_, double theta_,
                double E0_ = 1.0)
      : a(a_), mu_flux(mu_flux_), m(m_), theta(theta_), E0(E0_) {
    if (!(a > 0.0)) throw DomainError("CoulombSystem: a must be > 0");
    if (!(m >= 0.0)) throw DomainError("CoulombSystem: m must be >= 0");
    if (!(theta >= 0.0 && theta <= 3.14159265358979323846))
      throw DomainError("CoulombSystem: theta must lie in [0, pi]");
    if (!(E0 > 0.0)) throw DomainError("CoulombSystem: E0 must be > 0");
  }

  // Integer and fractional flux parts; alpha in [0, 1).
  int flux_n() const { return static_cast<int>(std::floor(mu_flux)); }
  double flux_alpha() const { return mu_flux - std::floor(mu_flux); }
};

// One angular channel. nu_signed = l + mu_flux + s/2 keeps the sign the
// radial system actually sees; nu = |nu_signed| enters all closed forms.
struct Channel {
  int l = 0;
  int s = 1;
  double nu = 0.0;
  double nu_signed = 0.0;
  double gamma_sq = 0.0;
  Regime regime = Regime::Subcritical;

  // gamma or sigma, whichever is real for this channel.
  double gamma() const { return std::sqrt(std::max(gamma_sq, 0.0)); }
  double sigma() const { return std::sqrt(std::max(-gamma_sq, 0.0)); }
};

struct RadialDoublet {
  Complex f{};
  Complex g{};
  double r = 0.0;
};

struct SpectrumLevel {
  int k = 0;
  int l = 0;
  int s = 1;
  double energy_re = 0.0;
  double width = 0.0;
  LevelKind kind = LevelKind::Bound;
};

// Truncation control for the charge series.
struct SeriesControl {
  int l_max = 2000;
  double tail_tol = 1e-10;
  TailAccel accel = TailAccel::RichardsonTail;
};

struct InducedCharge {
  double q1 = 0.0;
  double qr = 0.0;
  double total = 0.0;
  double tail_estimate = 0.0;
  int l_used = 0;
};

struct ChannelSigma {
  int l;
  int s;
  double sigma;
};

struct SupercriticalDensityPoint {
  double r = 0.0;
  double density_re = 0.0;
  double density_im = 0.0;
  std::vector<ChannelSigma> channels;
};

struct RGState {
  double g = 0.0;
  double log_r = 0.0;
};

struct RGFlowResult {
  std::vector<RGState> states;
  std::optional<double> r_star;  // radius where g reaches 1/2, if crossed
};

struct MassiveChargePoint {
  double r = 0.0;
  double q_m = 0.0;
  MassiveRegime regime = MassiveRegime::Exact;
};

}  // namespace planarvac
