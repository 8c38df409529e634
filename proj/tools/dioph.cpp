#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "dioph/cli/commands.hpp"
#include "dioph/exactnum/real.hpp"

namespace {

struct Sub {
  const char* name;
  const char* help;
  std::vector<std::pair<const char*, const char*>> flags;
};

const std::vector<Sub>& subcommands() {
  static const std::vector<Sub> subs{
      {"heights", "Height of a vector, polynomial or subspace",
       {{"vector", "comma separated rationals"}, {"poly", "coefficients, low degree first"},
        {"basis", "rows separated by ';', entries by ','"}}},
      {"minima", "Successive minima of the body C(X)", {{"n", "degree bound"}, {"xi", "real number"}, {"X", "X_0,...,X_n"}}},
      {"duality", "Duality products of C(X) and its dual body",
       {{"n", "degree bound"}, {"xi", "real number"}, {"X", "X_0,...,X_n"}}},
      {"hankel-run", "Hankel state, kernels and optional divisor construction",
       {{"n", "degree bound"}, {"xi", "real number"}, {"Q", "coefficients of Q"}, {"k", "rank drop bound"},
        {"t", "number of large X"}, {"X", "X_0,...,X_n"}}},
      {"gelfond-check", "Resultant gaps and factor chain over a polynomial file",
       {{"file", "one integer coefficient list per line"}, {"xi", "real number"}, {"n", "degree bound"}}},
      {"module-gen-check", "Minor module generation sweep", {{"kmax", "largest k"}, {"lmax", "largest l"}}},
      {"approximate", "Eisenstein approximations along an X schedule",
       {{"n", "degree bound"}, {"t", "number of conjugates"}, {"xi", "real number"},
        {"schedule", "comma separated X values"}, {"c", "schedule constant"}}},
      {"prop101", "Discriminant lower bound for the t-th nearest conjugate",
       {{"P", "irreducible polynomial"}, {"xi", "real number"}, {"t", "conjugate index"}}},
      {"liouville", "Adversarial check against Liouville targets",
       {{"n", "degree bound"}, {"t", "number of targets"}, {"kappa", "exponent constant"}, {"hmax", "height bound"},
        {"grid", "comma separated heights"}}},
  };
  return subs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Diophantine approximation experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json", output;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  long cap = 0;
  app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--output", output, "write to this file instead of stdout");
  app.add_option("--jobs", jobs, "worker bound")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for sampling checks");
  app.add_option("--precision-cap", cap, "refinement cap in bits")->check(CLI::Range(32L, 1L << 20));

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, CLI::App*> apps;
  for (const Sub& s : subcommands()) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    apps[s.name] = sub;
    for (const auto& [flag, help] : s.flags) sub->add_option(std::string("--") + flag, values[s.name][flag], help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (cap > 0) setenv("DIOPH_PRECISION_CAP", std::to_string(cap).c_str(), 1);

  dioph::cli::ExperimentConfig cfg;
  for (const auto& [name, sub] : apps) {
    if (!sub->parsed()) continue;
    cfg.command = name;
    for (const auto& [flag, value] : values[name])
      if (sub->count(std::string("--") + flag) > 0) cfg.params[flag] = value;
  }
  cfg.output = output;
  cfg.format = format;
  cfg.jobs = jobs;
  cfg.seed = seed;
  cfg.precision_cap = dioph::precision_cap();

  try {
    std::string text = dioph::cli::run(cfg);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << output << "\n";
        return 1;
      }
      out << text;
    }
    return 0;
  } catch (const dioph::Error& e) {
    std::cerr << e.what() << "\n";
    return dioph::cli::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
