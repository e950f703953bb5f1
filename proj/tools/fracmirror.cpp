#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitAssertion = 3;

const char* kHypothesisWarning =
    "warning: Euler characteristic and Hodge formulas assume that X and its mirror admit smooth "
    "MPCP resolutions; this is not checked\n";

}  // namespace

int main(int argc, char** argv) {
  using namespace fracmirror;
  CLI::App app{"Mirror symmetry computations for double covers branched along nef-partitions"};
  app.require_subcommand(1);

  std::string input;
  std::size_t order = 10;
  std::string normalization;
  std::string format = "json";

  const std::vector<std::pair<std::string, std::string>> commands{
      {"dual-nef", "Batyrev-Borisov dual nef-partition and diagnostics"},
      {"euler", "Euler characteristics of the double cover and its mirror"},
      {"hodge", "Hodge numbers of the double cover and its mirror"},
      {"gkz", "GKZ matrix, exponents, kernel and holomorphic period"},
      {"pf", "Picard-Fuchs operator"},
      {"mirror-map", "Frobenius pair and mirror map"},
      {"yukawa", "Yukawa coupling and A-model correlation series"},
      {"ifunction", "Untwisted I-function and its mirror map"},
      {"bseries", "Cohomology-valued B-series and Frobenius residue"},
      {"transition", "Lattice checks for the geometric transition data"},
      {"all", "Every applicable report"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "Input JSON file")->required();
    sub->add_option("-N", order, "Truncation order")->capture_default_str();
    sub->add_option("--normalization", normalization, "Yukawa normalization C as a rational p/q");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    cli::Options opt;
    opt.order = order;
    if (order < 1) throw ValidationError("N must be at least 1");
    if (order > cli::max_truncation())
      throw ValidationError("N = " + std::to_string(order) + " exceeds FRACMIRROR_MAX_N = " +
                            std::to_string(cli::max_truncation()));
    if (!normalization.empty()) opt.normalization = parse_rational(normalization);

    const cli::Input in = cli::load_input(input);
    if (in.geometry && (command == "euler" || command == "hodge" || command == "all")) std::cerr << kHypothesisWarning;
    const cli::Json report = cli::run_command(command, in, opt);
    if (format == "table") {
      std::cout << cli::render_table(report);
    } else {
      std::cout << report.dump(2) << "\n";
    }
    return 0;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
