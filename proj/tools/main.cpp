#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "momg/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Steady-state moment-method solver for rarefied cavity flows"};
  app.require_subcommand(1);

  CLI::App* solve =
      app.add_subcommand("solve", "Run a configured cavity scenario to steady state");
  std::string config_path;
  solve->add_option("--config", config_path, "JSON scenario configuration file")
      ->required();
  std::string solver_name, levels_text, output_dir;
  int order = 0, threads = 0;
  solve->add_option("--solver", solver_name, "time iteration: euler, fs, or nmg")
      ->check(CLI::IsMember({"euler", "fs", "nmg"}));
  solve->add_option("--order", order, "spatial reconstruction order")
      ->check(CLI::Range(1, 2));
  solve->add_option("--levels", levels_text, "grid levels: auto or a count");
  solve->add_option("--threads", threads, "worker threads")
      ->check(CLI::PositiveNumber);
  solve->add_option("--output", output_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    momg::ScenarioConfig config = momg::load_config(config_path);
    if (!solver_name.empty())
      config.solver = momg::solver_kind_from_string(solver_name);
    if (order != 0) config.space_order = order;
    if (!levels_text.empty()) config.levels = momg::levels_from_string(levels_text);
    if (threads != 0) config.threads = threads;
    if (!output_dir.empty()) config.output_dir = output_dir;

    std::cout << momg::config_echo(config) << std::flush;
    const momg::ScenarioResult result = momg::run_scenario(config);
    std::cout << "converged in " << result.report.iterations
              << " iterations, final ratio " << result.report.final_ratio << ", "
              << result.report.seconds << " s, " << result.report.work
              << " cell evaluations\n"
              << "wrote history.tsv, field.tsv, report.txt under "
              << config.output_dir << "\n";
    return 0;
  } catch (const momg::NonConvergence& e) {
    std::cerr << "solver did not converge: " << e.what() << "\n";
    return 2;
  } catch (const momg::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
