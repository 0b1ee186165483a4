#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "noethera/constructors.hpp"
#include "noethera/finite_ring.hpp"
#include "noethera/ideal.hpp"
#include "noethera/lattice.hpp"

namespace noethera {

/// Elements x with x^k = 0 for some k <= |R|; verified to be an ideal.
IdealSet nilradical(const FiniteRing& ring);

/// Non-units, if they form an ideal (i.e. the ring is local).
std::optional<IdealSet> maximal_ideal_if_local(const FiniteRing& ring);
bool is_local(const FiniteRing& ring);
bool is_field(const FiniteRing& ring);

/// Complete orthogonal set of primitive idempotents, sorted by index. Found
/// by scanning idempotents of R/nil R and lifting each along nil R with
/// e <- 3e^2 - 2e^3. Empty for the zero ring.
std::vector<Elem> primitive_idempotents(const FiniteRing& ring, const BuildOptions& opts = {});

struct LocalFactor {
  /// R / (1 - e)R, isomorphic to eR.
  FiniteRing ring;
  Elem idempotent;
  /// Ambient element -> factor element.
  std::vector<Elem> projection;
  /// Factor element -> e * representative, the CRT lift back into R.
  std::vector<Elem> lift;
  IdealSet maximal_ideal;
  std::vector<Elem> maximal_generators;
  std::size_t residue_field_size;
};

struct LocalDecomposition {
  std::uint64_t ambient;
  std::vector<LocalFactor> factors;

  std::vector<Elem> idempotents() const;
};

/// R = prod e_i R over the primitive idempotents; each factor verified local.
LocalDecomposition local_decompose(const FiniteRing& ring, const BuildOptions& opts = {});

/// Maximal ideals of R: preimages of the factor maximal ideals.
std::vector<IdealSet> maximal_ideals(const FiniteRing& ring, const LocalDecomposition& decomposition);

struct ResidueField {
  FiniteRing field;
  std::vector<Elem> reduction;
};
/// R/m for a local ring; throws InputError on non-local input.
ResidueField residue_field(const FiniteRing& local, const BuildOptions& opts = {});

/// mu(I) = dim_{R/m} I/mI for a local ring, with generators lifted from a
/// basis. Throws InputError on non-local input.
GeneratorWitness mu_nakayama(const FiniteRing& local, const IdealSet& ideal);
GeneratorWitness mu_nakayama(const LocalFactor& factor, const IdealSet& ideal);

/// mu over any finite ring: maximum of the local mu's, witness assembled
/// through the idempotents.
GeneratorWitness mu(const FiniteRing& ring, const IdealSet& ideal);
GeneratorWitness mu(const FiniteRing& ring, const LocalDecomposition& decomposition, const IdealSet& ideal);

struct HilbertFunction {
  /// H(n) = dim_{R/m} m^n / m^{n+1}, n = 0..n_max.
  std::vector<std::size_t> values;
  std::size_t residue_field_size = 0;
  /// First n >= 1 with H(n) = 0, if reached within n_max.
  std::optional<std::size_t> first_zero;
  /// Maximal constant run of H on [1, first_zero) ending just before the
  /// first zero. Truncation evidence only; a finite ring has no multiplicity.
  struct Window {
    std::size_t start;
    std::size_t end;
    std::size_t value;
  };
  std::optional<Window> stabilized;
};
HilbertFunction hilbert_function(const FiniteRing& local, std::size_t n_max);

struct PrincipalIdealRingCheck {
  bool principal = true;
  std::optional<GeneratorWitness> counterexample;
};
/// True iff every ideal in the lattice has mu <= 1.
PrincipalIdealRingCheck is_principal_ideal_ring(const FiniteRing& ring, const LatticeOptions& opts = {});

/// Composition length: sum over local factors of the socle-series lengths.
std::size_t composition_length(const FiniteRing& ring);
std::size_t composition_length(const LocalDecomposition& decomposition);

/// Isomorphism invariants used to match rings too large for brute force.
struct RingFingerprint {
  std::size_t size = 0;
  std::uint64_t characteristic = 0;
  std::size_t units = 0;
  std::size_t nilpotents = 0;
  std::size_t idempotents = 0;
  std::size_t principal_ideals = 0;
  std::size_t square_image = 0;
  std::vector<std::size_t> additive_orders;  // sorted multiset
  std::vector<std::size_t> residue_field_sizes;
  std::vector<std::vector<std::size_t>> hilbert;  // per local factor, sorted

  friend bool operator==(const RingFingerprint&, const RingFingerprint&) = default;
};
RingFingerprint fingerprint(const FiniteRing& ring);

}  // namespace noethera
