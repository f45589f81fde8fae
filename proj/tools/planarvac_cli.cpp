#include <map>
#include <string>

#include <CLI11.hpp>

#include "planarvac/runner.hpp"
#include "planarvac/version.hpp"

namespace {

void add_output_flags(CLI::App* cmd, planarvac::RunConfig& cfg) {
  cmd->add_option("-o,--output", cfg.output,
                  "Output file (default: stdout)");
  std::map<std::string, planarvac::OutputFormat> formats{
      {"csv", planarvac::OutputFormat::Csv},
      {"json", planarvac::OutputFormat::Json}};
  cmd->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_grid_flags(CLI::App* cmd, planarvac::RunConfig& cfg) {
  cmd->add_option("--r-min", cfg.r_min, "Grid lower bound");
  cmd->add_option("--r-max", cfg.r_max, "Grid upper bound");
  cmd->add_option("--n-points", cfg.n_points, "Grid size");
  std::map<std::string, planarvac::GridKind> grids{
      {"log", planarvac::GridKind::Log},
      {"linear", planarvac::GridKind::Linear}};
  cmd->add_option("--grid", cfg.grid, "Grid spacing")
      ->transform(CLI::CheckedTransformer(grids, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  planarvac::RunConfig cfg;
  CLI::App app{"Vacuum polarization tables for a planar Coulomb center"};
  app.set_version_flag("--version", planarvac::kVersion);
  app.require_subcommand(1);

  CLI::App* qind = app.add_subcommand(
      "qind", "Induced-charge series for a subcritical center");
  qind->add_option("--a", cfg.a, "Coulomb coupling")->required();
  qind->add_option("--alpha", cfg.alpha, "Fractional flux");
  qind->add_option("--tol", cfg.tol, "Tail tolerance");
  qind->add_option("--l-max", cfg.l_max, "Channel cutoff");
  add_output_flags(qind, cfg);

  CLI::App* sup = app.add_subcommand(
      "supercritical", "Massless supercritical density profile");
  sup->add_option("--a", cfg.a, "Coulomb coupling (> 1/2)")->required();
  sup->add_option("--theta", cfg.theta, "Extension angle");
  sup->add_option("--E0", cfg.E0, "Reference energy scale");
  add_grid_flags(sup, cfg);
  add_output_flags(sup, cfg);

  CLI::App* rg = app.add_subcommand(
      "rgflow", "Effective-coupling flow toward the critical value");
  rg->add_option("--g0", cfg.g0, "Initial coupling (>= 1/2)")->required();
  rg->add_option("--e0sq", cfg.e0_sq, "Interaction strength e0^2")
      ->required();
  rg->add_option("--r0", cfg.r0, "Starting radius");
  rg->add_option("--r-max", cfg.r_max, "Final radius");
  rg->add_option("--n-points", cfg.n_points, "Grid size");
  add_output_flags(rg, cfg);

  CLI::App* mas = app.add_subcommand(
      "massive", "Massive-fermion induced charge and densities");
  mas->add_option("--a", cfg.a, "Coulomb coupling")->required();
  cfg.m = 1.0;
  mas->add_option("--m", cfg.m, "Fermion mass");
  std::map<std::string, planarvac::MassiveSpace> spaces{
      {"coordinate", planarvac::MassiveSpace::Coordinate},
      {"momentum", planarvac::MassiveSpace::Momentum}};
  mas->add_option("--space", cfg.space, "Coordinate or momentum profile")
      ->transform(CLI::CheckedTransformer(spaces, CLI::ignore_case));
  mas->add_option("--tol", cfg.tol, "Quadrature tolerance");
  double acr_val = 0.0, eps0_val = 0.0;
  CLI::Option* acr_opt = mas->add_option(
      "--acr", acr_val, "Critical coupling for the real-polarization part");
  CLI::Option* eps0_opt = mas->add_option(
      "--eps0", eps0_val, "Resonance energy scale epsilon0");
  add_grid_flags(mas, cfg);
  add_output_flags(mas, cfg);

  CLI::App* spec = app.add_subcommand(
      "spectrum", "Subcritical bound-state ladder");
  spec->add_option("--a", cfg.a, "Coulomb coupling")->required();
  spec->add_option("--m", cfg.m, "Fermion mass")->required();
  spec->add_option("--k-max", cfg.k_max, "Radial quantum number cutoff");
  spec->add_option("--l-max", cfg.spectrum_l_max, "Orbital cutoff");
  add_output_flags(spec, cfg);

  CLI::App* res = app.add_subcommand(
      "resonance", "Resonance ladder (m = 0) or dived level (m > 0)");
  res->add_option("--a", cfg.a, "Coulomb coupling (> 1/2)")->required();
  res->add_option("--theta", cfg.theta, "Extension angle");
  double res_m = 0.0;
  res->add_option("--m", res_m, "Fermion mass (0 selects the ladder)");
  res->add_option("--k-max", cfg.k_count, "Number of ladder levels");
  res->add_option("--E0", cfg.E0, "Reference energy scale");
  add_output_flags(res, cfg);

  CLI::App* chk = app.add_subcommand(
      "specfun-check", "Verify special functions against closed forms");
  add_output_flags(chk, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (sub == mas) {
    if (acr_opt->count()) cfg.a_cr = acr_val;
    if (eps0_opt->count()) cfg.epsilon0 = eps0_val;
  }
  if (sub == res) cfg.m = res_m;
  return planarvac::run(cfg);
}
