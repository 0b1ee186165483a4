#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "noethera/error.hpp"
#include "noethera/rank_engine.hpp"

namespace noethera::cli {

/// Verbs that take a ring expression.
const std::vector<std::string>& ring_verbs();

struct CommandOptions {
  EngineOptions engine;
  /// Ideal generators for `mu`, as element literals.
  std::optional<std::string> gens;
  /// Directory against which algebra(...) paths resolve.
  std::filesystem::path base_dir = ".";
};

struct CommandOutcome {
  ExitCode code = ExitCode::Success;
  nlohmann::json report;
  /// Human-readable rendering of the report.
  std::string text;
};

/// Runs one verb on one ring expression. Library errors are caught and
/// turned into an outcome with the matching exit code.
CommandOutcome run_command(const std::string& verb, const std::string& ring, const CommandOptions& opts);

/// The more severe of two exit codes: 1 > 2 > 3 > 0.
ExitCode worse(ExitCode a, ExitCode b);

struct ManifestEntry {
  std::string name;
  std::string ring;
  std::vector<std::string> commands;
  std::optional<std::string> gens;
};

struct Manifest {
  std::filesystem::path output_dir;
  std::filesystem::path base_dir;
  std::size_t budget_ideals = 200000;
  double budget_seconds = 0;
  std::vector<ManifestEntry> entries;
};

/// JSON manifest:
///   {"output_dir": "...", "budgets": {"ideals": n, "seconds": s},
///    "entries": [{"name": "...", "ring": "...", "commands": ["rank", ...]}]}
/// Relative paths resolve against the manifest's directory.
Manifest load_manifest(const std::filesystem::path& path);
Manifest parse_manifest(const nlohmann::json& j, const std::filesystem::path& base_dir);

struct CorpusOutcome {
  ExitCode code = ExitCode::Success;
  std::size_t reports = 0;
  std::string summary;
};

/// One report per (entry, command) at <output_dir>/<name>.<command>.json and
/// a summary.txt table. Output bytes do not depend on `threads`.
CorpusOutcome run_corpus(const Manifest& manifest, unsigned threads, const EngineOptions& base);

/// Writes via a temporary file and rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace noethera::cli
