#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "noethera/error.hpp"
#include "noethera/ideal.hpp"

namespace noethera {

struct LatticeOptions {
  std::size_t max_ideals = 200000;
  /// Wall-clock cap in seconds; 0 disables it.
  double max_seconds = 0;
  unsigned threads = 1;
};

/// Every ideal of a finite ring, in canonical order (cardinality, then
/// lexicographic member list). `successors[i]` lists the ideals I_i + (x)
/// strictly above I_i; the transitive closure of that relation is
/// containment.
class IdealLattice {
 public:
  IdealLattice() = default;
  IdealLattice(std::vector<IdealSet> ideals, std::vector<std::vector<std::size_t>> successors);

  std::size_t size() const { return ideals_.size(); }
  const std::vector<IdealSet>& ideals() const { return ideals_; }
  const IdealSet& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<std::vector<std::size_t>>& successors() const { return successors_; }
  std::optional<std::size_t> index_of(const IdealSet& ideal) const;

 private:
  std::vector<IdealSet> ideals_;
  std::vector<std::vector<std::size_t>> successors_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// Thrown when enumeration exceeds its ideal-count or time budget. Passing
/// `partial` back as the `resume` argument continues the search.
class LatticeBudgetError : public BudgetError {
 public:
  LatticeBudgetError(const std::string& what, std::vector<IdealSet> partial)
      : BudgetError(what), partial_(std::move(partial)) {}
  const std::vector<IdealSet>& partial() const { return partial_; }

 private:
  std::vector<IdealSet> partial_;
};

/// Closes {0} under I -> I + (x). Frontier expansion may run on
/// `opts.threads` workers; the result does not depend on the schedule.
IdealLattice enumerate_ideals(const FiniteRing& ring, const LatticeOptions& opts = {},
                              std::span<const IdealSet> resume = {});

/// Distinct principal ideals, canonical order, each with its smallest generator.
struct PrincipalIdeal {
  Elem generator;
  IdealSet ideal;
};
std::vector<PrincipalIdeal> principal_ideals(const FiniteRing& ring);

struct GeneratorWitness {
  IdealSet ideal;
  std::vector<Elem> generators;
  std::size_t count() const { return generators.size(); }
};

struct BruteForceOptions {
  /// Subsets allowed per cardinality level before failing fast.
  std::uint64_t max_subsets_per_level = std::uint64_t{1} << 16;
};

/// Definitional minimal generator count: smallest k such that some k
/// elements of the ideal generate it. Candidate generators are one element
/// per distinct principal subideal, which loses no generality. mu({0}) = 0.
GeneratorWitness mu_bruteforce(const FiniteRing& ring, const IdealSet& ideal,
                               const BruteForceOptions& opts = {});

/// Lattice cache: header "noethera-lattice v1 <presentation hash> <ring size>
/// <ideal count>", then one hex bitset per line.
void save_lattice_cache(const std::filesystem::path& path, const FiniteRing& ring,
                        const IdealLattice& lattice);
/// Throws InputError if the header hash does not match `ring` or a line is
/// not an ideal.
IdealLattice load_lattice_cache(const std::filesystem::path& path, const FiniteRing& ring);

}  // namespace noethera
