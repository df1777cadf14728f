#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coalg/cli/commands.hpp"
#include "coalg/cli/suites.hpp"
#include "coalg/cli/workspace.hpp"
#include "coalg/error.hpp"

using namespace coalg;

int main(int argc, char** argv) {
  CLI::App app{"coalg: internal coalgebras of varieties, checked by enumeration"};
  app.require_subcommand(1);

  std::string json_path;
  std::vector<std::string> workspace_files;
  std::optional<std::size_t> bound;
  bool timing = false;
  app.add_option("--json", json_path, "Also write the report as JSON to this path");
  app.add_option("--workspace", workspace_files, "DSL files to load after the prelude")->check(CLI::ExistingFile);
  app.add_option("--bound", bound, "Term size bound for free carriers");
  app.add_flag("--timing", timing, "Record wall-clock milliseconds in the report");

  std::string target, phi, second;
  std::vector<std::string> names;

  auto* check = app.add_subcommand("check", "Verify a named theory, algebra, morphism, coalgebra or bialgebra");
  check->add_option("target", target)->required();

  auto* gphi = app.add_subcommand("gphi", "G_phi of a coalgebra (or group-like / primitive / invariants)");
  gphi->add_option("phi", phi)->required();
  gphi->add_option("coalgebra", second)->required();

  auto* vphi = app.add_subcommand("vphi", "Canonical coalgebra on the free algebra");
  vphi->add_option("phi", phi)->required();
  vphi->add_option("generators", names);

  auto* nphi = app.add_subcommand("nphi", "Canonical coalgebra on an algebra of a commutative variety");
  nphi->add_option("phi", phi)->required();
  nphi->add_option("algebra", second)->required();

  auto* ew = app.add_subcommand("ew", "Tensor, hom and adjunction checks for a bimodule");
  ew->add_option("bimodule", target)->required();
  ew->add_option("modules", names)->required();

  auto* hopf = app.add_subcommand("hopf", "Laws, group-likes and primitives of a bialgebra, or M1..M3");
  hopf->add_option("name", target)->required();

  auto* suite = app.add_subcommand("suite", "Run a named suite: paper-examples, kan-cogroups, acceptance");
  suite->add_option("name", target)->required();

  for (auto* sub : {check, gphi, vphi, nphi, ew, hopf, suite}) {
    sub->add_option("--json", json_path, "Also write the report as JSON to this path");
    sub->add_option("--workspace", workspace_files, "DSL files to load after the prelude")->check(CLI::ExistingFile);
    sub->add_option("--bound", bound, "Term size bound for free carriers");
    sub->add_flag("--timing", timing, "Record wall-clock milliseconds in the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Stopwatch clock;
    const auto ws = load_workspace(workspace_files);
    Report report;
    if (check->parsed()) report = cmd_check(ws, target);
    else if (gphi->parsed()) report = cmd_gphi(ws, phi, second, bound);
    else if (vphi->parsed()) report = cmd_vphi(ws, phi, names, bound);
    else if (nphi->parsed()) report = cmd_nphi(ws, phi, second);
    else if (ew->parsed()) report = cmd_ew(ws, target, names);
    else if (hopf->parsed()) report = cmd_hopf(ws, target);
    else report = cmd_suite(ws, target);
    if (timing) report.millis = clock.millis();

    std::cout << report.to_text();
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw Error("io", "cannot write " + json_path);
      out << report.to_json().dump(2) << "\n";
    }
    return report.failed() ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
