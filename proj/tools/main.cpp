#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  gbs::cli::RunConfig rc;
  std::string out;
  std::string scenario;

  CLI::App app{"gbs: branching systems, representations and faithfulness checks for graph algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", rc.pretty, "Indented output with decimal \"approx\" fields");
  app.add_option("--out", out, "Write the report to this file instead of stdout");
  app.add_option("--seed", rc.seed, "Seed for randomized spot checks")->capture_default_str();

  auto add_graph = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--graph", rc.graph, "Graph JSON file")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", rc.config, "Theta config JSON file")->check(CLI::ExistingFile);
  };

  auto* analyze = app.add_subcommand("analyze", "Sinks, simple cycles, exits, Condition (L) and W");
  add_graph(analyze, true);

  auto* build = app.add_subcommand("build", "Dump the affine system, or the rotation system with --config");
  add_graph(build, true);
  add_config(build);

  auto* verify = app.add_subcommand("verify", "Check the branching axioms and the Cuntz-Krieger relations");
  add_graph(verify, false);
  add_config(verify);
  verify->add_option("--system", rc.system, "System dump produced by build")->check(CLI::ExistingFile);
  verify->add_option("--mode", rc.mode, "cstar or algebraic")
      ->check(CLI::IsMember({"cstar", "algebraic"}))
      ->capture_default_str();

  auto* faithful = app.add_subcommand("faithful", "Irrational-angle faithfulness criterion for a rotation system");
  add_graph(faithful, true);
  add_config(faithful);
  faithful->add_option("--max-power", rc.max_power, "Cycle powers 1..n to separate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* converse = app.add_subcommand("converse", "Non-faithful representation for a graph violating Condition (L)");
  add_graph(converse, true);
  converse->add_option("--variant", rc.variant, "cstar or leavitt")
      ->check(CLI::IsMember({"cstar", "leavitt"}))
      ->capture_default_str();

  auto* reproduce = app.add_subcommand("reproduce", "Run a bundled scenario");
  reproduce->add_option("scenario", scenario, "example-irrational-loop, converse-cstar or converse-leavitt")
      ->required()
      ->check(CLI::IsMember({"example-irrational-loop", "converse-cstar", "converse-leavitt"}));
  reproduce->add_option("--max-power", rc.max_power, "Cycle powers 1..n to separate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gbs::cli::kError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "verify" && rc.system.empty() && rc.graph.empty()) {
    std::cerr << "verify: one of --system or --graph is required\n";
    return gbs::cli::kError;
  }

  const auto result = gbs::cli::run(command, rc, scenario);
  const std::string text = gbs::cli::render(result, rc.pretty);
  if (out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream file(out);
    if (!file) {
      std::cerr << "cannot write '" << out << "'\n";
      return gbs::cli::kError;
    }
    file << text << '\n';
  }
  if (result.report.contains("error")) std::cerr << result.report["error"]["message"].get<std::string>() << '\n';
  return result.exit_code;
}
