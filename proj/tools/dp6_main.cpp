#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dp6/scenario.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) dp6::fail(dp6::Err::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit_report(const dp6::Report& rep, bool as_json, double elapsed) {
  if (as_json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text(elapsed);
  return rep.any_fail() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and verification of degree-6 Del Pezzo surface data"};
  app.require_subcommand(1);

  std::string scenario_path, output_path, checks_arg;
  bool as_json = false;

  auto* construct = app.add_subcommand("construct", "build a surface from a scenario file");
  construct->add_option("file", scenario_path, "scenario JSON")->required();
  construct->add_option("-o,--output", output_path, "write the surface JSON here");

  auto* verify = app.add_subcommand("verify", "run the scenario checks");
  verify->add_option("file", scenario_path, "scenario JSON")->required();
  verify->add_option("--checks", checks_arg, "comma-separated subset of checks");
  verify->add_flag("--json", as_json, "emit the JSON report");

  auto* selftest = app.add_subcommand("selftest", "run the built-in corpus");
  selftest->add_flag("--json", as_json, "emit the JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      dp6::Scenario s = dp6::parse_scenario(read_file(scenario_path));
      dp6::apply_env_overrides(s);
      dp6::Json out = dp6::construct_json(s);
      if (output_path.empty()) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::ofstream os(output_path);
        os << out.dump(2) << "\n";
      }
      return 0;
    }
    if (verify->parsed()) {
      dp6::Scenario s = dp6::parse_scenario(read_file(scenario_path));
      dp6::apply_env_overrides(s);
      std::vector<std::string> selected;
      if (!checks_arg.empty()) {
        std::stringstream ss(checks_arg);
        std::string item;
        while (std::getline(ss, item, ',')) selected.push_back(item);
      }
      auto start = std::chrono::steady_clock::now();
      dp6::Report rep = dp6::run_verify(s, selected);
      double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return emit_report(rep, as_json, elapsed);
    }
    // selftest
    auto start = std::chrono::steady_clock::now();
    dp6::Report rep = dp6::run_selftest();
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit_report(rep, as_json, elapsed);
  } catch (const dp6::Error& e) {
    if (e.code() == dp6::Err::ParseError) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
