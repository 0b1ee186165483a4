#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "noethera/cli.hpp"

namespace nc = noethera::cli;

int main(int argc, char** argv) {
  CLI::App app{"noethera: minimal generators, rank and local rank of commutative rings"};
  app.require_subcommand(1);

  std::size_t budget_ideals = 200000;
  double budget_time = 0;
  bool as_json = false;
  std::string cache_dir;
  unsigned threads = 1;
  bool exhaustive = false;
  app.add_option("--budget-ideals", budget_ideals, "Maximum number of ideals to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-time", budget_time, "Wall-clock cap for enumeration in seconds (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", as_json, "Print the JSON report");
  app.add_option("--cache-dir", cache_dir, "Lattice cache directory (NOETHERA_CACHE overrides)");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--exhaustive-validate", exhaustive, "Check ring axioms on every triple");

  std::string ring;
  std::string gens;
  for (const auto& verb : nc::ring_verbs()) {
    auto* sub = app.add_subcommand(verb);
    sub->add_option("ring", ring, "Ring expression, e.g. 'product(Z/8, Z[sqrt(-5)])'")->required();
    if (verb == "mu") sub->add_option("--gens", gens, "Ideal generators, e.g. 'x, y'")->required();
  }
  std::string manifest_path;
  auto* corpus = app.add_subcommand("corpus", "Run every command of a JSON manifest");
  corpus->add_option("manifest", manifest_path)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(noethera::ExitCode::InputError);
  }

  nc::CommandOptions opts;
  opts.engine.lattice.max_ideals = budget_ideals;
  opts.engine.lattice.max_seconds = budget_time;
  opts.engine.lattice.threads = threads;
  opts.engine.build.exhaustive_validate = exhaustive;
  if (const char* env = std::getenv("NOETHERA_CACHE"); env && *env)
    opts.engine.cache_dir = env;
  else if (!cache_dir.empty())
    opts.engine.cache_dir = cache_dir;

  if (corpus->parsed()) {
    try {
      const auto manifest = nc::load_manifest(manifest_path);
      const auto outcome = nc::run_corpus(manifest, threads, opts.engine);
      std::cout << outcome.summary;
      return static_cast<int>(outcome.code);
    } catch (const noethera::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return static_cast<int>(e.exit_code());
    }
  }

  const auto* sub = app.get_subcommands().front();
  if (!gens.empty()) opts.gens = gens;
  const auto outcome = nc::run_command(sub->get_name(), ring, opts);
  if (outcome.code != noethera::ExitCode::Success && outcome.report.contains("error"))
    std::cerr << outcome.text;
  else if (as_json)
    std::cout << outcome.report.dump(2) << "\n";
  else
    std::cout << outcome.text;
  return static_cast<int>(outcome.code);
}
