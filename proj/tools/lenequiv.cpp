// Command-line front end: lenequiv run <config.json> [overrides].

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lenequiv/errors.hpp"
#include "lenequiv/report.hpp"

int main(int argc, char** argv) {
  using namespace lenequiv;

  CLI::App app{"Length-equivalent curves on hyperbolic surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* run_cmd = app.add_subcommand("run", "Run the task named in a JSON config");
  std::string config_path, task, out, format = "json";
  std::optional<std::uint64_t> seed;
  std::optional<int> word_bound;
  std::optional<double> spread, tol;
  run_cmd->add_option("config", config_path, "Run configuration (JSON)")->required();
  run_cmd->add_option("--task", task, "Override the task");
  run_cmd->add_option("--seed", seed, "Run a single seed instead of the configured list");
  run_cmd->add_option("--word-bound", word_bound, "Override word_bound");
  run_cmd->add_option("--spread", spread, "Override spread");
  run_cmd->add_option("--tol", tol, "Override tol");
  run_cmd->add_option("--out", out, "Write the report here instead of output_path or stdout");
  run_cmd->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* check_cmd = app.add_subcommand("check-config", "Validate a config and print it normalized");
  std::string check_path;
  check_cmd->add_option("config", check_path, "Run configuration (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*check_cmd) {
      std::cout << config_to_json(load_config(check_path)).dump(2) << "\n";
      return kExitOk;
    }
    RunConfig config = load_config(config_path);
    if (!task.empty()) config.task = parse_task(task);
    if (seed) config.seeds = {*seed};
    if (word_bound) config.word_bound = *word_bound;
    if (spread) config.spread = *spread;
    if (tol) config.tol = *tol;
    validate(config);

    const Report report = run(config);
    const std::string bytes = emit(report, parse_format(format));
    const std::string path = !out.empty() ? out : config.output_path;
    if (path.empty() || path == "-")
      std::cout << bytes;
    else
      write_file(path, bytes);
    return report.status;
  } catch (const std::exception& e) {
    std::cerr << "lenequiv: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
