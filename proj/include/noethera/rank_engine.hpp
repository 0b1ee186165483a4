#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "noethera/dedekind.hpp"
#include "noethera/finite_ring.hpp"
#include "noethera/lattice.hpp"
#include "noethera/local_structure.hpp"

namespace noethera {

struct RingObject;

/// A[t] for a finite (hence Artinian) ring A.
struct PolyOverArtinian {
  std::shared_ptr<const FiniteRing> base;
};

struct FormalProduct {
  std::vector<RingObject> components;
};

struct RingObject {
  std::variant<std::shared_ptr<const FiniteRing>, QuadraticOrder, PolyOverArtinian, FormalProduct> value;
  /// Display text, normally the DSL expression; `describe` falls back to
  /// the presentation when empty.
  std::string text;

  static RingObject finite(FiniteRing ring);
  static RingObject quadratic(QuadraticOrder order);
  static RingObject poly(FiniteRing base);
  /// Nested products are flattened; a single component is returned as is.
  static RingObject product(std::vector<RingObject> components);

  const FiniteRing* as_finite() const;
  const QuadraticOrder* as_quadratic() const;
  const PolyOverArtinian* as_poly() const;
  const FormalProduct* as_product() const;

  /// Short human-readable description used in reports.
  std::string describe() const;
};

/// A rank value: exact, a certified interval, a lower bound from a partial
/// enumeration, or the symbolic infinite rank.
struct RankValue {
  enum class Kind { Exact, Interval, AtLeast, Infinite };
  Kind kind = Kind::Exact;
  std::size_t lo = 0;
  std::size_t hi = 0;

  static RankValue exact(std::size_t v) { return {Kind::Exact, v, v}; }
  static RankValue interval(std::size_t lo, std::size_t hi);
  static RankValue at_least(std::size_t lo) { return {Kind::AtLeast, lo, lo}; }
  static RankValue infinite() { return {Kind::Infinite, 0, 0}; }

  bool is_exact() const { return kind == Kind::Exact; }
  bool is_finite() const { return kind != Kind::Infinite; }
  std::optional<std::size_t> value() const {
    return is_exact() ? std::optional<std::size_t>(lo) : std::nullopt;
  }
  /// "2", "[1,2]", ">=2" or "infinite".
  std::string text() const;
  friend bool operator==(const RankValue&, const RankValue&) = default;
};

/// Componentwise maximum, as for the rank of a finite product.
RankValue rank_max(const RankValue& a, const RankValue& b);

enum class Dimension { Zero, One, AtLeastTwo };
std::string to_string(Dimension d);

struct Witness {
  std::string ideal;
  std::vector<std::string> generators;
  std::size_t mu = 0;
};

struct LocalWitness {
  std::string maximal_ideal;
  std::string ideal;
  std::size_t local_mu = 0;
};

struct RankReport {
  std::string object;
  RankValue rk;
  RankValue lrk;
  /// nullopt when rk or lrk is not exact.
  std::optional<bool> of_local_rank;
  std::optional<Witness> rk_witness;
  std::optional<LocalWitness> lrk_witness;
  Dimension dimension = Dimension::Zero;
  bool finite_rank = true;
  /// Only part of the lattice was enumerated; rk is a lower bound.
  bool partial = false;
  std::optional<std::size_t> lattice_size;
  std::vector<std::string> notes;
  std::vector<RankReport> components;
};

enum class ComponentTag { LocalPrincipalArtinian, DedekindPrincipal, DedekindNonPrincipal, Other };
std::string to_string(ComponentTag tag);

struct TaggedComponent {
  std::string description;
  ComponentTag tag = ComponentTag::Other;
  std::optional<std::string> reason;
};

struct Classification {
  std::string object;
  /// true = of local rank.
  bool of_local_rank = true;
  bool structural_of_local_rank = true;
  /// nullopt when rk = lrk + 1 cannot be decided exactly.
  std::optional<bool> numeric_of_local_rank;
  std::vector<TaggedComponent> components;
  std::vector<std::string> reasons;
  RankValue rk;
  RankValue lrk;
  Dimension dimension = Dimension::Zero;
};

struct BoundsReport {
  RankValue rk;
  RankValue lrk;
  bool holds = true;
  /// rk - lrk when both are exact.
  std::optional<std::size_t> slack;
};

struct FieldFactorCheck {
  std::size_t field_size = 0;
  std::size_t samples = 0;
  bool all_principal = true;
  /// First sample pair and its gcd, e.g. "(t^2+1, t+1) = (t+1)".
  std::string example;
};

struct PolynomialReport {
  std::string base;
  std::size_t base_size = 0;
  std::size_t nilradical_size = 0;
  std::size_t reduced_size = 0;
  bool reduced_is_product_of_fields = true;
  std::vector<FieldFactorCheck> field_factors;
  std::size_t length = 0;
  RankValue rk;
  RankValue lrk;
  Classification classification;
};

struct EngineOptions {
  LatticeOptions lattice;
  DedekindOptions dedekind;
  BuildOptions build;
  /// When set, finite-ring lattices are read from and written to this directory.
  std::optional<std::filesystem::path> cache_dir;
  std::size_t poly_samples = 64;
};

/// Lattice of `ring`, through the cache directory when configured.
IdealLattice lattice_for(const FiniteRing& ring, const EngineOptions& opts);

RankReport rank(const RingObject& object, const EngineOptions& opts = {});
RankReport local_rank(const RingObject& object, const EngineOptions& opts = {});
/// Runs the structural component test and the numeric rk = lrk + 1 test; throws
/// InvariantError if they disagree.
Classification classify(const RingObject& object, const EngineOptions& opts = {});
BoundsReport check_bounds(const RingObject& object, const EngineOptions& opts = {});
/// lrk <= rk <= lrk + 1 evaluated on (possibly inexact) values.
BoundsReport sandwich(const RankValue& rk, const RankValue& lrk);
PolynomialReport polynomial_report(const FiniteRing& base, const EngineOptions& opts = {});
Dimension dimension_flag(const RingObject& object);

/// Writes "(a, b)" from generator labels; "(0)" for the zero ideal.
std::string describe_ideal(const FiniteRing& ring, const std::vector<Elem>& generators);

}  // namespace noethera
