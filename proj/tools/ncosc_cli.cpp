// Batch driver: run one analysis described by a JSON config and write the report.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ncosc/run_config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"noncommutative (2+1)-D oscillator analyses"};
  std::string config_path;
  std::string output_path;
  std::string format;
  bool quiet = false;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--output", output_path, "report path (overrides config; default stdout)");
  app.add_option("--format", format, "json|csv (overrides config)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--quiet", quiet, "suppress the summary line");
  CLI11_PARSE(app, argc, argv);

  ncosc::RunConfig cfg;
  try {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "cannot open config: " << config_path << "\n";
      return 2;
    }
    nlohmann::json j;
    in >> j;
    cfg = ncosc::RunConfig::from_json(j);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  if (!output_path.empty()) cfg.output_path = output_path;
  if (!format.empty()) cfg.output_format = format;

  ncosc::RunResult result;
  try {
    result = ncosc::run(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }

  const std::string body = cfg.output_format == "csv" && !result.csv.empty()
                               ? result.csv
                               : result.report.dump(2) + "\n";
  if (cfg.output_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(cfg.output_path);
    if (!out) {
      std::cerr << "cannot write output: " << cfg.output_path << "\n";
      return 2;
    }
    out << body;
  }
  if (!quiet)
    std::cerr << ncosc::to_string(cfg.command) << ": exit " << result.exit_code << "\n";
  return result.exit_code;
}
