#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "noethera/cli.hpp"

namespace noethera::cli {

using nlohmann::json;

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp);
    out << content;
    if (!out) throw InputError("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Manifest parse_manifest(const json& j, const std::filesystem::path& base_dir) {
  auto fail = [](const std::string& msg) -> void { throw InputError("manifest: " + msg); };
  if (!j.is_object()) fail("top level must be an object");
  Manifest m;
  m.base_dir = base_dir;
  if (!j.contains("output_dir") || !j["output_dir"].is_string()) fail("missing string 'output_dir'");
  m.output_dir = j["output_dir"].get<std::string>();
  if (m.output_dir.is_relative()) m.output_dir = base_dir / m.output_dir;
  if (j.contains("budgets")) {
    const auto& b = j["budgets"];
    if (!b.is_object()) fail("'budgets' must be an object");
    if (b.contains("ideals")) {
      if (!b["ideals"].is_number_integer() || b["ideals"].get<long long>() <= 0) fail("budgets.ideals must be positive");
      m.budget_ideals = b["ideals"].get<std::size_t>();
    }
    if (b.contains("seconds")) {
      if (!b["seconds"].is_number() || b["seconds"].get<double>() <= 0) fail("budgets.seconds must be positive");
      m.budget_seconds = b["seconds"].get<double>();
    }
  }
  if (!j.contains("entries") || !j["entries"].is_array()) fail("missing array 'entries'");
  std::set<std::string> names;
  const auto& verbs = ring_verbs();
  for (const auto& e : j["entries"]) {
    ManifestEntry entry;
    if (!e.is_object() || !e.contains("name") || !e["name"].is_string()) fail("every entry needs a string 'name'");
    entry.name = e["name"].get<std::string>();
    if (entry.name.empty() || entry.name.find_first_of("/\\") != std::string::npos)
      fail("entry name '" + entry.name + "' must be non-empty and contain no path separators");
    if (!names.insert(entry.name).second) fail("duplicate entry name '" + entry.name + "'");
    if (!e.contains("ring") || !e["ring"].is_string()) fail("entry '" + entry.name + "' needs a string 'ring'");
    entry.ring = e["ring"].get<std::string>();
    if (!e.contains("commands") || !e["commands"].is_array() || e["commands"].empty())
      fail("entry '" + entry.name + "' needs a non-empty 'commands' list");
    for (const auto& c : e["commands"]) {
      if (!c.is_string() || std::find(verbs.begin(), verbs.end(), c.get<std::string>()) == verbs.end())
        fail("entry '" + entry.name + "': unknown command " + c.dump());
      entry.commands.push_back(c.get<std::string>());
    }
    if (e.contains("gens")) {
      if (!e["gens"].is_string()) fail("entry '" + entry.name + "': 'gens' must be a string");
      entry.gens = e["gens"].get<std::string>();
    }
    m.entries.push_back(std::move(entry));
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open manifest " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("manifest " + path.string() + ": " + e.what());
  }
  auto dir = path.parent_path();
  if (dir.empty()) dir = ".";
  return parse_manifest(j, dir);
}

namespace {

struct TaskResult {
  ExitCode code = ExitCode::Success;
  std::string rk = "-", lrk = "-", verdict = "-";
};

std::string status_of(ExitCode c) {
  switch (c) {
    case ExitCode::Success: return "ok";
    case ExitCode::InvariantBreach: return "invariant-breach";
    case ExitCode::BudgetExhausted: return "budget-exhausted";
    case ExitCode::InputError: return "input-error";
  }
  return "?";
}

std::string value_text(const json& v) {
  if (v.is_number()) return std::to_string(v.get<std::size_t>());
  if (v.is_string()) return v.get<std::string>();
  if (v.contains("at_least")) return ">=" + std::to_string(v["at_least"].get<std::size_t>());
  if (v.contains("lo")) return "[" + std::to_string(v["lo"].get<std::size_t>()) + "," + std::to_string(v["hi"].get<std::size_t>()) + "]";
  return "-";
}

}  // namespace

CorpusOutcome run_corpus(const Manifest& manifest, unsigned threads, const EngineOptions& base) {
  struct Task {
    std::size_t entry;
    std::string command;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < manifest.entries.size(); ++i)
    for (const auto& c : manifest.entries[i].commands) tasks.push_back({i, c});

  CommandOptions opts;
  opts.engine = base;
  opts.engine.lattice.max_ideals = manifest.budget_ideals;
  opts.engine.lattice.max_seconds = manifest.budget_seconds;
  opts.engine.lattice.threads = 1;
  opts.base_dir = manifest.base_dir;

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& entry = manifest.entries[tasks[t].entry];
      CommandOptions local = opts;
      local.gens = entry.gens;
      const auto outcome = run_command(tasks[t].command, entry.ring, local);
      json doc{{"name", entry.name}, {"ring", entry.ring}, {"command", tasks[t].command},
               {"status", status_of(outcome.code)}};
      if (outcome.report.contains("error")) {
        doc["error"] = outcome.report["error"];
        doc["report"] = nullptr;
      } else {
        doc["report"] = outcome.report;
      }
      TaskResult& r = results[t];
      r.code = outcome.code;
      const auto& rep = outcome.report;
      if (rep.contains("rk")) r.rk = value_text(rep["rk"]);
      if (rep.contains("lrk")) r.lrk = value_text(rep["lrk"]);
      if (rep.contains("verdict"))
        r.verdict = rep["verdict"].get<std::string>();
      else if (rep.contains("of_local_rank") && rep["of_local_rank"].is_boolean())
        r.verdict = rep["of_local_rank"].get<bool>() ? "of-local-rank" : "not-of-local-rank";
      try {
        write_atomic(manifest.output_dir / (entry.name + "." + tasks[t].command + ".json"), doc.dump(2) + "\n");
      } catch (const std::exception&) {
        r.code = worse(r.code, ExitCode::InputError);
      }
    }
  };
  const unsigned n = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CorpusOutcome out;
  std::ostringstream os;
  os << "name\tcommand\tstatus\trk\tlrk\tverdict\n";
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const auto& r = results[t];
    os << manifest.entries[tasks[t].entry].name << "\t" << tasks[t].command << "\t" << status_of(r.code) << "\t"
       << r.rk << "\t" << r.lrk << "\t" << r.verdict << "\n";
    out.code = worse(out.code, r.code);
  }
  out.reports = tasks.size();
  out.summary = os.str();
  write_atomic(manifest.output_dir / "summary.txt", out.summary);
  return out;
}

}  // namespace noethera::cli
