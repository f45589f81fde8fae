#pragma once

#include <optional>
#include <string>

#include "planarvac/table.hpp"

namespace planarvac {

enum class OutputFormat { Csv, Json };
enum class GridKind { Log, Linear };
enum class MassiveSpace { Coordinate, Momentum };

// Everything the command-line front end can ask for. One struct for all
// subcommands; each run_* reads the fields it documents and validates them.
struct RunConfig {
  std::string command;

  double a = 0.1;
  double alpha = 0.0;
  double m = 0.0;
  double theta = 0.0;
  double E0 = 1.0;

  double r_min = 0.1;
  double r_max = 10.0;
  int n_points = 32;
  GridKind grid = GridKind::Log;

  int l_max = 2000;
  double tol = 1e-10;

  // rgflow
  double g0 = 1.0;
  double e0_sq = 1.0;
  double r0 = 1.0;

  // spectrum
  int k_max = 3;
  int spectrum_l_max = 2;

  // resonance
  int k_count = 4;

  // massive
  MassiveSpace space = MassiveSpace::Coordinate;
  std::optional<double> a_cr;
  std::optional<double> epsilon0;

  std::string output;  // empty = stdout
  OutputFormat format = OutputFormat::Csv;
};

// Builds the table for the configured command. Throws ValidationError /
// DomainError for bad configs, ConvergenceError family for numerical
// failures.
Table run_command(const RunConfig& cfg);

// Full front-end behavior: run, write, map errors to exit codes
// (0 ok, 1 validation, 2 convergence).
int run(const RunConfig& cfg);

}  // namespace planarvac
