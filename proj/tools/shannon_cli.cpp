// Command-line front end: run, trace and validate scenario files.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "shannon/report.hpp"
#include "shannon/scenario.hpp"

namespace {

constexpr int kExitInputError = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw shannon::ScenarioError({"cannot open " + path});
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_errors(const shannon::ScenarioError& e) {
  std::cerr << "input error:\n";
  for (const auto& msg : e.errors()) std::cerr << "  " << msg << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic transform towers along monomial valuations"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  std::optional<std::size_t> horizon;
  bool undecided_ok = false;
  std::size_t steps = 10;

  auto* run = app.add_subcommand("run", "Run a scenario and check its assertions");
  run->add_option("scenario", path, "Scenario file, or - for stdin")->required();
  run->add_option("--horizon", horizon, "Override the scenario horizon");
  run->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  run->add_flag("--undecided-ok", undecided_ok, "Treat undecided assertions as passing");

  auto* tr = app.add_subcommand("trace", "Print frame summaries step by step");
  tr->add_option("scenario", path, "Scenario file, or - for stdin")->required();
  tr->add_option("--steps,--horizon", steps, "Number of steps")->check(CLI::PositiveNumber);
  tr->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  auto* val = app.add_subcommand("validate", "Parse and validate a scenario");
  val->add_option("scenario", path, "Scenario file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    shannon::Scenario scenario = shannon::parse_scenario(read_input(path));

    if (*val) {
      std::cout << "valid: " << (scenario.name.empty() ? path : scenario.name) << " (d="
                << scenario.dimension << ", " << shannon::to_string(scenario.mode) << ", "
                << scenario.probes.size() << " probes, " << scenario.assertions.size()
                << " assertions)\n";
      return 0;
    }

    if (*tr) {
      shannon::Trace t = shannon::trace(scenario, steps);
      std::cout << (format == "machine" ? shannon::render_trace_machine(t, scenario.dimension)
                                        : shannon::render_trace_text(t, scenario.dimension));
      return 0;
    }

    shannon::RunOptions options;
    options.horizon = horizon;
    options.undecided_ok = undecided_ok;
    shannon::RunReport report = shannon::run_scenario(scenario, options);
    std::cout << (format == "machine" ? shannon::render_machine(report)
                                      : shannon::render_text(report));
    return report.exit_code();
  } catch (const shannon::ScenarioError& e) {
    print_errors(e);
    return kExitInputError;
  } catch (const shannon::ResourceCapError& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  } catch (const shannon::ValueError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}
