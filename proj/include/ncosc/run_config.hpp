#ifndef NCOSC_RUN_CONFIG_HPP
#define NCOSC_RUN_CONFIG_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ncosc/hamiltonian.hpp"
#include "ncosc/spectra.hpp"

namespace ncosc {

using ordered_json = nlohmann::ordered_json;

enum class Command {
  algebra_check,
  levi,
  spectrum,
  perturb_small,
  perturb_large,
  dirac_equivalence,
  converge,
};

std::string to_string(Command c);
Command command_from_string(const std::string& s);

struct Tolerances {
  double jacobi = 1e-12;
  double membership = 1e-10;
  double convergence_rel = 1e-8;
  double canonical = 1e-10;
};

struct RunConfig {
  int schema_version = 1;
  Command command = Command::spectrum;
  NCParams params;
  std::optional<IrrepSpec> irrep;
  double j = 0.0;
  int n_max = 12;
  int refine_steps = 4;
  int count = 10;
  std::vector<double> t_grid;               // perturb-small
  std::vector<TruncationSpec> ladder;       // converge
  Tolerances tolerances;
  std::string output_path;                  // empty = stdout
  std::string output_format = "json";       // json|csv

  // exact round-trip: parse(serialize(cfg)) == cfg
  ordered_json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
  void validate() const;  // throws std::invalid_argument
};

// exit status: 0 success, 2 validation error, 3 numerical failure
struct RunResult {
  int exit_code = 0;
  ordered_json report;
  std::string csv;  // filled when format == csv and the command has a CSV form
};

RunResult run(const RunConfig& config);

}  // namespace ncosc

#endif
