#include "planarvac/runner.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "planarvac/dirac.hpp"
#include "planarvac/errors.hpp"
#include "planarvac/massive.hpp"
#include "planarvac/parallel.hpp"
#include "planarvac/specfun.hpp"
#include "planarvac/subcritical.hpp"
#include "planarvac/supercritical.hpp"
#include "planarvac/version.hpp"

namespace planarvac {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEuler = 0.577215664901532861;

std::vector<double> make_grid(double lo, double hi, int n, GridKind kind,
                              const char* what) {
  if (!(n >= 2))
    throw ValidationError(std::string(what) + ": n_points must be >= 2");
  if (!(lo < hi))
    throw ValidationError(std::string(what) +
                          ": grid lower bound must be below upper bound");
  if (kind == GridKind::Log && !(lo > 0.0))
    throw ValidationError(std::string(what) +
                          ": log grid needs a positive lower bound");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    g[i] = kind == GridKind::Log ? lo * std::pow(hi / lo, f)
                                 : lo + (hi - lo) * f;
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

const char* grid_name(GridKind kind) {
  return kind == GridKind::Log ? "log" : "linear";
}

void stamp(Table& t, const RunConfig& cfg) {
  t.add_meta("command", cfg.command);
  t.add_meta("version", std::string(kVersion));
}

Table run_qind(const RunConfig& cfg) {
  SeriesControl ctl;
  ctl.l_max = cfg.l_max;
  ctl.tail_tol = cfg.tol;
  InducedCharge q = q_ind(cfg.a, cfg.alpha, ctl);
  Table t;
  stamp(t, cfg);
  t.add_meta("a", cfg.a);
  t.add_meta("alpha", cfg.alpha);
  t.add_meta("tol", cfg.tol);
  t.add_meta("l_max", static_cast<std::int64_t>(cfg.l_max));
  t.add_meta("units", "induced charge per unit e0^2");
  t.columns = {"a",    "alpha",         "q1",     "qr",
               "q_ind", "tail_estimate", "l_used", "regime"};
  t.rows.push_back({cfg.a, cfg.alpha, q.q1, q.qr, q.total, q.tail_estimate,
                    static_cast<std::int64_t>(q.l_used),
                    std::string("subcritical")});
  return t;
}

Table run_supercritical(const RunConfig& cfg) {
  CoulombSystem sys(cfg.a, 0.0, 0.0, cfg.theta, cfg.E0);
  const double s0 = sigma0(cfg.a);
  std::vector<double> grid =
      make_grid(cfg.r_min, cfg.r_max, cfg.n_points, cfg.grid,
                "supercritical");
  std::vector<SupercriticalDensityPoint> pts(grid.size());
  parallel_for(grid.size(),
               [&](std::size_t i) { pts[i] = density_general(sys, grid[i]); });
  Table t;
  stamp(t, cfg);
  t.add_meta("a", cfg.a);
  t.add_meta("theta", cfg.theta);
  t.add_meta("E0", cfg.E0);
  t.add_meta("sigma0", s0);
  t.add_meta("n_channels", static_cast<std::int64_t>(pts[0].channels.size()));
  t.add_meta("r_min", cfg.r_min);
  t.add_meta("r_max", cfg.r_max);
  t.add_meta("n_points", static_cast<std::int64_t>(cfg.n_points));
  t.add_meta("grid", grid_name(cfg.grid));
  t.add_meta("units", "r in 1/E0; density per unit e, scales as 1/r^2");
  t.columns = {"r", "density_re", "density_im", "n_channels", "regime"};
  for (std::size_t i = 0; i < pts.size(); ++i)
    t.rows.push_back({pts[i].r, pts[i].density_re, pts[i].density_im,
                      static_cast<std::int64_t>(pts[i].channels.size()),
                      std::string("supercritical")});
  return t;
}

Table run_rgflow(const RunConfig& cfg) {
  if (!(cfg.r_max > cfg.r0))
    throw ValidationError("rgflow: r_max must exceed r0");
  std::vector<double> grid =
      make_grid(cfg.r0, cfg.r_max, cfg.n_points, GridKind::Log, "rgflow");
  RGFlowResult flow = rg_flow(cfg.g0, cfg.e0_sq, cfg.r0, grid);
  Table t;
  stamp(t, cfg);
  t.add_meta("g0", cfg.g0);
  t.add_meta("e0_sq", cfg.e0_sq);
  t.add_meta("r0", cfg.r0);
  t.add_meta("r_max", cfg.r_max);
  t.add_meta("n_points", static_cast<std::int64_t>(cfg.n_points));
  t.add_meta("grid", "log");
  if (flow.r_star)
    t.add_meta("r_star", *flow.r_star);
  else
    t.add_meta("r_star", "none");
  t.add_meta("units", "r in units of r0 scale; g dimensionless");
  t.columns = {"r", "g", "log_r", "regime"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const RGState& st = flow.states[i];
    t.rows.push_back({grid[i], st.g, st.log_r,
                      std::string(st.g > 0.5 ? "supercritical" : "critical")});
  }
  return t;
}

Table run_massive(const RunConfig& cfg) {
  if (!(cfg.m > 0.0))
    throw ValidationError("massive: m must be positive");
  if (cfg.a_cr.has_value() != cfg.epsilon0.has_value())
    throw ValidationError(
        "massive: acr and eps0 must be supplied together");
  Table t;
  stamp(t, cfg);
  t.add_meta("a", cfg.a);
  t.add_meta("m", cfg.m);
  if (cfg.space == MassiveSpace::Momentum) {
    std::vector<double> grid =
        make_grid(cfg.r_min, cfg.r_max, cfg.n_points, cfg.grid, "massive");
    t.add_meta("space", "momentum");
    t.add_meta("q_min", cfg.r_min);
    t.add_meta("q_max", cfg.r_max);
    t.add_meta("n_points", static_cast<std::int64_t>(cfg.n_points));
    t.add_meta("grid", grid_name(cfg.grid));
    t.add_meta("units",
               "q in units of m; Pi per unit e0^2; charge per unit e0");
    t.columns = {"q_abs", "pi_unit", "q_m", "regime"};
    std::vector<std::pair<double, double>> vals(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
      vals[i] = {polarization_operator(grid[i] * grid[i], cfg.m),
                 induced_charge_momentum(cfg.a, grid[i], cfg.m)};
    });
    for (std::size_t i = 0; i < grid.size(); ++i)
      t.rows.push_back({grid[i], vals[i].first, vals[i].second,
                        std::string("momentum")});
    return t;
  }
  std::vector<double> grid =
      make_grid(cfg.r_min, cfg.r_max, cfg.n_points, cfg.grid, "massive");
  const bool with_real = cfg.a_cr.has_value();
  t.add_meta("space", "coordinate");
  t.add_meta("r_min", cfg.r_min);
  t.add_meta("r_max", cfg.r_max);
  t.add_meta("n_points", static_cast<std::int64_t>(cfg.n_points));
  t.add_meta("grid", grid_name(cfg.grid));
  t.add_meta("quad_tol", cfg.tol);
  if (with_real) {
    t.add_meta("a_cr", *cfg.a_cr);
    t.add_meta("epsilon0", *cfg.epsilon0);
  }
  t.add_meta("units", "r in 1/m; charge per unit e0; density per unit e0");
  t.columns = {"r", "q_m", "regime"};
  if (with_real) {
    t.columns.push_back("j0_real");
    t.columns.push_back("total_density");
  }
  struct Row {
    MassiveChargePoint pt;
    double j0 = 0.0;
    double total = 0.0;
  };
  std::vector<Row> vals(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    vals[i].pt = q_m_coordinate(cfg.a, cfg.m, grid[i], cfg.tol);
    if (with_real) {
      vals[i].j0 =
          real_polarization_density(*cfg.a_cr, cfg.m, *cfg.epsilon0, grid[i]);
      vals[i].total = vals[i].pt.q_m * cfg.m * cfg.m + vals[i].j0;
    }
  });
  for (const Row& row : vals) {
    std::vector<Table::Cell> cells{row.pt.r, row.pt.q_m,
                                   std::string("exact")};
    if (with_real) {
      cells.push_back(row.j0);
      cells.push_back(row.total);
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table run_spectrum(const RunConfig& cfg) {
  if (!(cfg.m > 0.0))
    throw ValidationError("spectrum: m must be positive");
  if (cfg.k_max < 0 || cfg.spectrum_l_max < 0)
    throw ValidationError("spectrum: k_max and l_max must be >= 0");
  CoulombSystem sys(cfg.a, 0.0, cfg.m, 0.0, cfg.E0);
  Table t;
  stamp(t, cfg);
  t.add_meta("a", cfg.a);
  t.add_meta("m", cfg.m);
  t.add_meta("k_max", static_cast<std::int64_t>(cfg.k_max));
  t.add_meta("l_max", static_cast<std::int64_t>(cfg.spectrum_l_max));
  t.columns = {"l", "k", "energy", "kind", "regime"};
  std::int64_t skipped = 0;
  for (int l = 0; l <= cfg.spectrum_l_max; ++l) {
    if (!(cfg.a < l + 0.5)) {
      ++skipped;
      continue;
    }
    for (int k = 0; k <= cfg.k_max; ++k) {
      SpectrumLevel lvl = bound_spectrum(sys, k, l);
      t.rows.push_back({static_cast<std::int64_t>(l),
                        static_cast<std::int64_t>(k), lvl.energy_re,
                        std::string("bound"), std::string("subcritical")});
    }
  }
  t.add_meta("n_dived_channels", skipped);
  t.add_meta("units", "energy in the units of m");
  return t;
}

Table run_resonance(const RunConfig& cfg) {
  Table t;
  stamp(t, cfg);
  t.add_meta("a", cfg.a);
  t.add_meta("theta", cfg.theta);
  t.add_meta("m", cfg.m);
  if (cfg.m == 0.0) {
    if (cfg.k_count < 1)
      throw ValidationError("resonance: k_max must be >= 1 for the ladder");
    CoulombSystem sys(cfg.a, 0.0, 0.0, cfg.theta, cfg.E0);
    t.add_meta("E0", cfg.E0);
    t.add_meta("tau", tau_massless(cfg.a));
    t.add_meta("sigma0", sigma0(cfg.a));
    t.add_meta("units", "energies in units of E0");
    t.columns = {"k", "energy_re", "width", "kind", "regime"};
    for (int k = 0; k < cfg.k_count; ++k) {
      SpectrumLevel lvl = resonance_spectrum_massless(sys, k);
      t.rows.push_back({static_cast<std::int64_t>(k), lvl.energy_re,
                        lvl.width, std::string("resonance"),
                        std::string("supercritical")});
    }
    return t;
  }
  CoulombSystem sys(cfg.a, 0.0, cfg.m, cfg.theta, cfg.E0);
  SpectrumLevel lvl = solve_dived_resonance(sys);
  const double eps = -lvl.energy_re - cfg.m;
  t.add_meta("residual", dived_resonance_residual(sys, eps));
  t.add_meta("units", "energies in the units of m");
  t.columns = {"epsilon", "energy_re", "width", "kind", "regime"};
  t.rows.push_back({eps, lvl.energy_re, lvl.width, std::string("resonance"),
                    std::string("supercritical")});
  return t;
}

struct SpotCheck {
  const char* name;
  double got;
  double want;
};

Table run_specfun_check(const RunConfig& cfg) {
  const double x = 1.4;
  std::vector<SpotCheck> spots;
  spots.push_back({"ln_gamma(0.5)", ln_gamma(Complex{0.5, 0.0}).real(),
                   0.5 * std::log(kPi)});
  spots.push_back({"ln_gamma(5)", ln_gamma(Complex{5.0, 0.0}).real(),
                   std::log(24.0)});
  spots.push_back({"digamma(1)", digamma(Complex{1.0, 0.0}).real(), -kEuler});
  spots.push_back({"digamma(0.5)", digamma(Complex{0.5, 0.0}).real(),
                   -kEuler - 2.0 * std::log(2.0)});
  spots.push_back(
      {"trigamma(1)", polygamma_real(1, 1.0), kPi * kPi / 6.0});
  spots.push_back({"polygamma3(1)", polygamma_real(3, 1.0),
                   kPi * kPi * kPi * kPi / 15.0});
  spots.push_back({"whittaker_m(0,1/2)",
                   whittaker_M(Complex{0.0, 0.0}, Complex{0.5, 0.0}, x).real(),
                   2.0 * std::sinh(0.5 * x)});
  spots.push_back({"whittaker_w(0,1/2)",
                   whittaker_W(Complex{0.0, 0.0}, Complex{0.5, 0.0}, x).real(),
                   std::exp(-0.5 * x)});
  spots.push_back({"bessel_i(0.5)", bessel_I(0.5, x),
                   std::sqrt(2.0 / (kPi * x)) * std::sinh(x)});
  spots.push_back({"q1(0.3,0)", q1(0.3, 0.0, SeriesControl{}),
                   0.3 * kPi / 4.0});
  Table t;
  stamp(t, cfg);
  t.add_meta("tolerance", 1e-9);
  t.add_meta("units", "dimensionless");
  t.columns = {"check", "got", "want", "rel_err", "status"};
  for (const SpotCheck& s : spots) {
    const double scale = std::max(std::abs(s.want), 1e-300);
    const double rel = std::abs(s.got - s.want) / scale;
    t.rows.push_back({std::string(s.name), s.got, s.want, rel,
                      std::string(rel < 1e-9 ? "ok" : "FAIL")});
  }
  return t;
}

}  // namespace

Table run_command(const RunConfig& cfg) {
  if (cfg.command == "qind") return run_qind(cfg);
  if (cfg.command == "supercritical") return run_supercritical(cfg);
  if (cfg.command == "rgflow") return run_rgflow(cfg);
  if (cfg.command == "massive") return run_massive(cfg);
  if (cfg.command == "spectrum") return run_spectrum(cfg);
  if (cfg.command == "resonance") return run_resonance(cfg);
  if (cfg.command == "specfun-check") return run_specfun_check(cfg);
  throw ValidationError("unknown command: " + cfg.command);
}

int run(const RunConfig& cfg) {
  try {
    Table t = run_command(cfg);
    std::ostringstream body;
    if (cfg.format == OutputFormat::Json)
      t.write_json(body);
    else
      t.write_csv(body);
    if (cfg.output.empty()) {
      std::cout << body.str();
      std::cout.flush();
    } else {
      std::ofstream out(cfg.output, std::ios::binary);
      if (!out)
        throw ValidationError("cannot open output file: " + cfg.output);
      out << body.str();
      if (!out)
        throw ValidationError("failed writing output file: " + cfg.output);
    }
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NoRootError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    // convergence family and overflow: numerical failure
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace planarvac
