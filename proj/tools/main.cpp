#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "hypertrees/errors.hpp"

namespace {

using hypertrees::cli::RunConfig;

struct RawOptions {
  std::string format = "markdown-table";
  std::string mode = "both";
  std::string what = "forest";
  std::string symbols;
};

void add_common(CLI::App* sub, RunConfig& config, RawOptions& raw, bool with_symbol = true) {
  if (with_symbol) {
    sub->add_option("--p", config.p, "polygon size p")->check(CLI::PositiveNumber);
    sub->add_option("--q", config.q, "vertex degree q")->check(CLI::PositiveNumber);
  }
  sub->add_option("--levels", config.levels, "number of levels / belts (for probs: the level i)");
  sub->add_option("--precision", config.precision, "decimal digits")->check(CLI::Range(1, 100000));
  sub->add_option("--format", raw.format, "markdown-table | csv | json-lines");
  sub->add_option("--out", config.out, "output file (default: standard output)");
  sub->add_option("--cap", config.vertex_cap, "vertex cap for mosaic builds")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = hypertrees::cli;
  CLI::App app{"Layered trees on regular {p,q} mosaics: counts, constants, probabilities, verification"};
  app.require_subcommand(1);

  RunConfig config;
  RawOptions raw;
  try {
    config.vertex_cap = cli::default_vertex_cap();
  } catch (const hypertrees::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }

  auto* counts = app.add_subcommand("counts", "a_i, b_i and a_i+b_i for levels 0..levels");
  add_common(counts, config, raw);
  auto* constants = app.add_subcommand("constants", "eigenvalues, closed-form coefficients, L, K, M");
  add_common(constants, config, raw);
  auto* probs = app.add_subcommand("probs", "root-level distribution of a level-i vertex");
  add_common(probs, config, raw);
  probs->add_option("--mode", raw.mode, "asymptotic | exact | both");
  auto* verify = app.add_subcommand("verify", "cross-check enumeration, recursion and closed form");
  add_common(verify, config, raw, false);
  verify->add_option("--symbols", raw.symbols, "comma-separated p:q pairs");
  verify->add_flag("--inject-fault", config.inject_fault, "detach one forest vertex before checking");
  auto* exporter = app.add_subcommand("export", "forest / spanning tree (DOT) or mosaic edge list");
  add_common(exporter, config, raw);
  exporter->add_option("--what", raw.what, "forest | spanning | mosaic-edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (chosen->count("--levels") == 0) {
    if (name == "probs") config.levels = 7;
    if (name == "verify") config.levels = 6;
    if (name == "export") config.levels = 3;
  }
  try {
    config.format = cli::parse_format(raw.format);
    config.mode = cli::parse_mode(raw.mode);
    config.what = cli::parse_what(raw.what);
    if (!raw.symbols.empty()) config.symbols = cli::parse_symbol_list(raw.symbols);
  } catch (const hypertrees::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
  return cli::run(name, config, std::cout, std::cerr);
}
