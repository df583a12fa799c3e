// bidisk-lab: reducing subspaces of Mp, p = z^k + w^l, on truncation windows.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error.

#include "bidisk/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

constexpr int kUsageError = 2;

struct Flags {
  std::string k = "1";
  std::string l = "1";
  int max_grade = 8;
  std::optional<int> safe_grade;
  int trials = 20;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::string format = "json";
  bool commutant = false;
  std::string output;
  std::string fault;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--k", f.k, "exponent of z, a value or an inclusive range like 1..3")
      ->capture_default_str();
  cmd->add_option("--l", f.l, "exponent of w, a value or an inclusive range")->capture_default_str();
  cmd->add_option("--max-grade", f.max_grade, "largest grade n+m kept in the window")
      ->capture_default_str();
  cmd->add_option("--safe-grade", f.safe_grade, "grades asserted exactly (default max-grade - 4)");
  cmd->add_option("--trials", f.trials, "random probes per minimality test")->capture_default_str();
  cmd->add_option("--seed", f.seed, "seed for the minimality probes")->capture_default_str();
  cmd->add_option("--tol", f.tol, "singular value threshold")->capture_default_str();
  cmd->add_option("--format", f.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", f.output, "write the report to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reducing subspaces of Mp for p = z^k + w^l on the Bergman space of the bidisk"};
  app.require_subcommand(1);

  Flags flags;
  const std::map<std::string, bidisk::Command> commands = {
      {"analyze", bidisk::Command::Analyze},
      {"verify", bidisk::Command::Verify},
      {"classes", bidisk::Command::Classes},
      {"commutant", bidisk::Command::Commutant},
  };
  std::map<std::string, CLI::App*> subs;
  subs["analyze"] = app.add_subcommand("analyze", "structure report and minimal subspace inventory");
  subs["verify"] = app.add_subcommand("verify", "run every invariant suite; exit 1 on a failure");
  subs["classes"] = app.add_subcommand("classes", "eigenvalue classes of the window basis");
  subs["commutant"] = app.add_subcommand("commutant", "numeric commutant dimension");
  for (auto& [name, cmd] : subs) add_common(cmd, flags);
  subs["analyze"]->add_flag("--commutant", flags.commutant, "also measure the commutant dimension");
  subs["verify"]->add_flag("--commutant", flags.commutant, "include the commutant dimension check");
  subs["verify"]->add_option("--inject-fault", flags.fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  bidisk::RunConfig cfg;
  for (const auto& [name, cmd] : subs) {
    if (cmd->parsed()) cfg.command = commands.at(name);
  }
  bidisk::RunResult result;
  try {
    cfg.k = bidisk::parse_range(flags.k);
    cfg.l = bidisk::parse_range(flags.l);
    cfg.max_grade = flags.max_grade;
    cfg.safe_grade = flags.safe_grade.value_or(flags.max_grade - 4);
    cfg.trials = flags.trials;
    cfg.seed = flags.seed;
    cfg.tol = flags.tol;
    cfg.format = flags.format == "text" ? bidisk::Format::Text : bidisk::Format::Json;
    cfg.commutant = flags.commutant;
    if (!flags.fault.empty()) cfg.fault = flags.fault;
    bidisk::validate(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  result = bidisk::run(cfg);
  const std::string text = bidisk::render(result.document, cfg.format);
  if (flags.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(flags.output);
    if (!out) {
      std::cerr << "cannot open " << flags.output << "\n";
      return kUsageError;
    }
    out << text;
  }
  if (result.exit_code != 0) {
    std::cerr << "verification failed\n";
  }
  return result.exit_code;
}
