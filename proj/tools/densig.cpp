// SPDX-License-Identifier: Apache-2.0
//
// densig: analyze bipartite density matrices described in a small state
// language, or run the built-in demo scenarios.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "densig/errors.hpp"
#include "densig/program.hpp"
#include "densig/report.hpp"
#include "densig/tensor_core.hpp"

namespace {

// Classically correlated two-qubit channel: block spectrum, then a
// teleportation run that only transports populations.
constexpr const char *kDemoEq4 = R"(dims 2 2
rho R = classical_corr
analyze R
teleport R with 0.6 0.8
)";

// Maximally entangled channel: full-rank block spectrum, teleportation that
// also transports the relative phase, and the side-by-side comparison.
constexpr const char *kDemoEq7 = R"(dims 2 2
rho R = bell
analyze R
teleport R with 0.6 0.8
compare 0.6 0.8
)";

// Two-party reduction of a GHZ state: non-product even though every block
// is diagonal.
constexpr const char *kDemoGhz = R"(dims 2 2
rho R = tripartite(0.5, 0.5).AB
analyze R
)";

int run_text(const std::string &text, double rank_tol) {
  const densig::StateProgram program = densig::parse_state_spec(text);
  const densig::Report report = densig::run(program, rank_tol);
  std::cout << densig::render_report(report);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"bipartite density-matrix entanglement signatures and "
               "teleportation simulation"};
  app.require_subcommand(1);
  app.fallthrough(); // --rank-tol may trail the subcommand

  double rank_tol = densig::kDefaultRankRelTol;
  app.add_option("--rank-tol", rank_tol,
                 "relative eigenvalue threshold for the numerical rank")
      ->check(CLI::PositiveNumber);

  std::string file;
  CLI::App *analyze = app.add_subcommand(
      "analyze", "parse a state-description file, run it, print the report");
  analyze->add_option("file", file, "program file")->required();

  std::string demo_name;
  CLI::App *demo =
      app.add_subcommand("demo", "run a built-in scenario: eq4, eq7 or ghz");
  demo->add_option("name", demo_name, "demo name")
      ->required()
      ->check(CLI::IsMember({"eq4", "eq7", "ghz"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (demo->parsed()) {
      const std::string text = demo_name == "eq4"   ? kDemoEq4
                               : demo_name == "eq7" ? kDemoEq7
                                                    : kDemoGhz;
      return run_text(text, rank_tol);
    }
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open '" << file << "'\n";
      return 1;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return run_text(buffer.str(), rank_tol);
  } catch (const densig::ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const densig::NameError &e) {
    std::cerr << "name error: " << e.what() << "\n";
    return 1;
  } catch (const densig::NotHermitianError &e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const densig::NumericalError &e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const densig::Error &e) {
    // DimsError, StateError, WeightError, BasisError: the program parsed but
    // describes an invalid state.
    std::cerr << "invalid state: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
