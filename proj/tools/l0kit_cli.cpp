// Batch front end: run, oracle and net subcommands over JSON scenarios.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "l0kit/scenario.hpp"

namespace {

int emit(const l0kit::Outcome& out, const std::string& path) {
  const std::string text = out.report.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(path);
    if (!file) {
      std::cerr << "error: cannot write " << path << "\n";
      return static_cast<int>(l0kit::Exit::BadInput);
    }
    file << text;
  }
  if (out.exit != l0kit::Exit::Ok && out.report.contains("error"))
    std::cerr << "error: " << out.report["error"]["message"].get<std::string>() << "\n";
  return static_cast<int>(out.exit);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed points and nets for sigma-stable maps on finite probability spaces"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> eps;
  std::size_t samples = 10000;

  auto* run = app.add_subcommand("run", "solve a scenario and write its report");
  run->add_option("scenario", scenario_path, "scenario file")->required();
  run->add_option("--out", out_path, "report file (default: stdout)");
  run->add_option("--seed", seed, "override the scenario seed");

  auto* oracle = app.add_subcommand("oracle", "compare the solver with the per-atom classical pipeline");
  oracle->add_option("scenario", scenario_path, "scenario file")->required();
  oracle->add_option("--out", out_path, "report file (default: stdout)");
  oracle->add_option("--seed", seed, "override the scenario seed");

  auto* net = app.add_subcommand("net", "build and verify an epsilon-net for the scenario set");
  net->add_option("scenario", scenario_path, "scenario file")->required();
  net->add_option("--eps", eps, "net radius (default: the scenario's eps)");
  net->add_option("--samples", samples, "verification samples");
  net->add_option("--out", out_path, "certificate file (default: stdout)");
  net->add_option("--seed", seed, "override the scenario seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(l0kit::Exit::BadInput);
  }

  try {
    l0kit::Scenario sc = l0kit::load_scenario(scenario_path);
    if (seed) sc.seed = *seed;
    if (run->parsed()) return emit(l0kit::run_scenario(sc), out_path);
    if (oracle->parsed()) return emit(l0kit::compare_with_oracle(sc), out_path);
    return emit(l0kit::emit_net(sc, eps, samples), out_path);
  } catch (const l0kit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(l0kit::exit_for(e.code()));
  }
}
