// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "csv_writer.hpp"
#include "risfso/errors.hpp"
#include "scenario_io.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitDomainError = 2;
constexpr int kExitIoError = 3;

risfso::linkbudget::Scenario load_or_default(const std::string& config_path,
                                             const std::string& mode) {
  risfso::linkbudget::Scenario scenario =
      config_path.empty() ? risfso::cli::parse_scenario("{}")
                          : risfso::cli::load_scenario(config_path);
  if (!mode.empty()) {
    scenario.divergence_mode = risfso::cli::parse_divergence_mode(mode);
  }
  return scenario;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Module geometry and link budget planner for "
               "surface-redirected free-space optical links"};
  app.require_subcommand(1);

  std::string config_path;
  std::string mode;

  CLI::App* geometry_cmd = app.add_subcommand(
      "geometry", "Print module geometry and the depth-optimal angle");
  CLI::App* link_cmd = app.add_subcommand(
      "link", "Evaluate the end-to-end link budget");
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Sweep one variable and write a CSV curve family");

  for (CLI::App* cmd : {geometry_cmd, link_cmd, sweep_cmd}) {
    cmd->add_option("--config", config_path,
                    "Scenario file (JSON); defaults apply when omitted")
        ->envname("PLANNER_CONFIG");
    cmd->add_option("--mode", mode,
                    "Divergence mode override: total_distance or virtual");
  }

  bool include_breakdown = false;
  link_cmd->add_flag("--breakdown", include_breakdown,
                     "Also print each loss stage");

  std::string variable;
  std::string range_text;
  std::string transmittances_text = "0.8,1,2,5,10";
  std::string out_path;
  sweep_cmd->add_option("--variable", variable,
                        "distance_ratio, incidence_angle or s_ris_distance")
      ->required();
  sweep_cmd->add_option("--range", range_text, "Grid as start:stop:steps")
      ->required();
  sweep_cmd->add_option("--transmittances", transmittances_text,
                        "Comma-separated transmittance values")
      ->capture_default_str();
  sweep_cmd->add_option("--out", out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    const risfso::linkbudget::Scenario scenario =
        load_or_default(config_path, mode);
    if (geometry_cmd->parsed()) {
      std::fputs(risfso::cli::geometry_report(scenario).c_str(), stdout);
    } else if (link_cmd->parsed()) {
      std::fputs(risfso::cli::link_report(scenario, include_breakdown).c_str(),
                 stdout);
    } else {
      risfso::sweep::SweepSpec spec;
      spec.variable = risfso::cli::parse_sweep_variable(variable);
      spec.range = risfso::cli::parse_range(range_text);
      spec.transmittances =
          risfso::cli::parse_transmittances(transmittances_text);
      spec.base = scenario;
      const risfso::sweep::CurveSeries series = risfso::sweep::run(spec);
      risfso::cli::write_csv(series, out_path);
      std::printf("wrote %zu rows x %zu columns to %s (scenario %s)\n",
                  series.grid.size(), series.columns.size() + 1,
                  out_path.c_str(), series.scenario_digest.c_str());
    }
    return kExitSuccess;
  } catch (const risfso::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfigError;
  } catch (const risfso::DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitDomainError;
  } catch (const risfso::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kExitIoError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitDomainError;
  }
}
