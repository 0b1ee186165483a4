#include "noethera/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

namespace noethera {

IdealLattice::IdealLattice(std::vector<IdealSet> ideals, std::vector<std::vector<std::size_t>> successors)
    : ideals_(std::move(ideals)), successors_(std::move(successors)) {
  successors_.resize(ideals_.size());
  for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i].members(), i);
}

std::optional<std::size_t> IdealLattice::index_of(const IdealSet& ideal) const {
  auto it = index_.find(ideal.members());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<PrincipalIdeal> principal_ideals(const FiniteRing& ring) {
  std::unordered_map<ElementSet, Elem, ElementSetHash> seen;
  std::vector<PrincipalIdeal> out;
  for (Elem x = 0; x < ring.size(); ++x) {
    IdealSet p = principal_ideal(ring, x);
    if (seen.emplace(p.members(), x).second) out.push_back({x, std::move(p)});
  }
  std::sort(out.begin(), out.end(), [](const PrincipalIdeal& a, const PrincipalIdeal& b) {
    return canonical_less(a.ideal.members(), b.ideal.members());
  });
  return out;
}

namespace {

// All I + P for principal P not inside I, deduplicated, in principal order.
std::vector<ElementSet> expand(const FiniteRing& ring, const ElementSet& ideal,
                               const std::vector<PrincipalIdeal>& principals,
                               const std::vector<std::vector<Elem>>& principal_elems) {
  std::vector<ElementSet> out;
  for (std::size_t k = 0; k < principals.size(); ++k) {
    if (principals[k].ideal.members().is_subset_of(ideal)) continue;
    ElementSet sum = additive_span(ring, ideal, principal_elems[k]);
    if (std::find(out.begin(), out.end(), sum) == out.end()) out.push_back(std::move(sum));
  }
  return out;
}

}  // namespace

IdealLattice enumerate_ideals(const FiniteRing& ring, const LatticeOptions& opts,
                              std::span<const IdealSet> resume) {
  const auto start = std::chrono::steady_clock::now();
  const auto principals = principal_ideals(ring);
  std::vector<std::vector<Elem>> principal_elems;
  for (const auto& p : principals) principal_elems.push_back(p.ideal.elements());

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> known;
  std::vector<ElementSet> found;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> frontier;

  auto partial = [&] {
    std::vector<IdealSet> out;
    for (const auto& s : found) out.push_back(IdealSet::trusted(ring, s));
    return out;
  };
  auto insert = [&](ElementSet s) -> std::size_t {
    auto [it, fresh] = known.emplace(s, found.size());
    if (fresh) {
      found.push_back(std::move(s));
      frontier.push_back(it->second);
      if (found.size() > opts.max_ideals)
        throw LatticeBudgetError("ideal lattice exceeds the budget of " + std::to_string(opts.max_ideals) +
                                     " ideals",
                                 partial());
    }
    return it->second;
  };

  insert(IdealSet::zero(ring).members());
  for (const auto& seed : resume) {
    require_ambient(ring, seed);
    insert(seed.members());
  }

  const unsigned threads = std::max(1u, opts.threads);
  while (!frontier.empty()) {
    std::vector<std::size_t> current;
    current.swap(frontier);
    std::vector<std::vector<ElementSet>> results(current.size());
    auto work = [&](std::size_t i) { results[i] = expand(ring, found[current[i]], principals, principal_elems); };
    if (threads == 1 || current.size() < 2) {
      for (std::size_t i = 0; i < current.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(threads, current.size()); ++t)
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < current.size(); i = next++) work(i);
        });
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < current.size(); ++i)
      for (auto& s : results[i]) edges.emplace_back(current[i], insert(std::move(s)));
    if (opts.max_seconds > 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      if (elapsed.count() > opts.max_seconds && !frontier.empty())
        throw LatticeBudgetError("ideal lattice enumeration exceeded the time budget", partial());
    }
  }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return canonical_less(found[a], found[b]); });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::vector<IdealSet> ideals;
  ideals.reserve(found.size());
  for (std::size_t i : order) ideals.push_back(IdealSet::trusted(ring, found[i]));
  std::vector<std::vector<std::size_t>> succ(found.size());
  for (auto [from, to] : edges)
    if (from != to) succ[rank[from]].push_back(rank[to]);
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return IdealLattice(std::move(ideals), std::move(succ));
}

namespace {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

GeneratorWitness mu_bruteforce(const FiniteRing& ring, const IdealSet& ideal, const BruteForceOptions& opts) {
  require_ambient(ring, ideal);
  if (ideal.is_zero()) return {ideal, {}};

  std::vector<Elem> candidates;
  std::vector<std::vector<Elem>> candidate_elems;
  {
    std::unordered_map<ElementSet, Elem, ElementSetHash> seen;
    ideal.members().for_each([&](Elem x) {
      if (x == ring.zero()) return;
      IdealSet p = principal_ideal(ring, x);
      if (seen.emplace(p.members(), x).second) {
        candidates.push_back(x);
        candidate_elems.push_back(p.elements());
      }
    });
  }
  const std::size_t m = candidates.size();
  for (std::size_t k = 1; k <= m; ++k) {
    const std::uint64_t subsets = binomial_capped(m, k, opts.max_subsets_per_level);
    if (subsets > opts.max_subsets_per_level)
      throw BudgetError("brute-force mu: C(" + std::to_string(m) + "," + std::to_string(k) +
                        ") subsets exceed the per-level cap of " +
                        std::to_string(opts.max_subsets_per_level) + "; use the Nakayama path (mu)");
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ElementSet s = IdealSet::zero(ring).members();
      for (std::size_t i : pick) s = additive_span(ring, std::move(s), candidate_elems[i]);
      if (s == ideal.members()) {
        GeneratorWitness w{ideal, {}};
        for (std::size_t i : pick) w.generators.push_back(candidates[i]);
        return w;
      }
      std::size_t pos = k;
      while (pos > 0 && pick[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t j = pos; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw InvariantError("brute-force mu: candidate principal ideals do not generate the ideal");
}

void save_lattice_cache(const std::filesystem::path& path, const FiniteRing& ring, const IdealLattice& lattice) {
  std::ostringstream os;
  os << "noethera-lattice v1 " << std::hex << ring.presentation_hash() << std::dec << " " << ring.size() << " "
     << lattice.size() << "\n";
  for (const auto& ideal : lattice.ideals()) os << ideal.members().to_hex() << "\n";
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write lattice cache " + tmp);
    out << os.str();
  }
  std::filesystem::rename(tmp, path);
}

IdealLattice load_lattice_cache(const std::filesystem::path& path, const FiniteRing& ring) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open lattice cache " + path.string());
  std::string magic, version, hash;
  std::size_t size = 0, count = 0;
  if (!(in >> magic >> version >> hash >> size >> count) || magic != "noethera-lattice" || version != "v1")
    throw InputError("lattice cache " + path.string() + ": bad header");
  std::ostringstream expect;
  expect << std::hex << ring.presentation_hash();
  if (hash != expect.str() || size != ring.size())
    throw InputError("lattice cache " + path.string() + ": presentation hash mismatch");
  std::vector<ElementSet> sets;
  std::string line;
  while (in >> line) sets.push_back(IdealSet::from_members(ring, ElementSet::from_hex(line, ring.size())).members());
  if (sets.size() != count) throw InputError("lattice cache " + path.string() + ": truncated");

  std::sort(sets.begin(), sets.end(), canonical_less);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!index.emplace(sets[i], i).second) throw InputError("lattice cache: duplicate ideal");
  const auto principals = principal_ideals(ring);
  std::vector<std::vector<Elem>> principal_elems;
  for (const auto& p : principals) principal_elems.push_back(p.ideal.elements());
  std::vector<std::vector<std::size_t>> succ(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto& s : expand(ring, sets[i], principals, principal_elems)) {
      auto it = index.find(s);
      if (it == index.end()) throw InputError("lattice cache: ideal list is not closed under sums");
      succ[i].push_back(it->second);
    }
    std::sort(succ[i].begin(), succ[i].end());
  }
  if (index.find(IdealSet::zero(ring).members()) == index.end())
    throw InputError("lattice cache: zero ideal missing");
  std::vector<IdealSet> ideals;
  for (auto& s : sets) ideals.push_back(IdealSet::trusted(ring, std::move(s)));
  return IdealLattice(std::move(ideals), std::move(succ));
}

}  // namespace noethera
