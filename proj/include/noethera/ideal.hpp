#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "noethera/element_set.hpp"
#include "noethera/finite_ring.hpp"

namespace noethera {

/// An ideal of a FiniteRing as a set of element indices. The ambient ring is
/// identified by its table hash, so ideals are plain values.
class IdealSet {
 public:
  /// Validates that `members` contains zero and is closed under addition and
  /// multiplication by every ring element; throws InputError otherwise.
  static IdealSet from_members(const FiniteRing& ring, ElementSet members);
  static IdealSet from_elements(const FiniteRing& ring, std::span<const Elem> elems);
  /// No validation; for closure results that are ideals by construction.
  static IdealSet trusted(const FiniteRing& ring, ElementSet members) {
    return IdealSet(ring.content_hash(), std::move(members));
  }
  static IdealSet zero(const FiniteRing& ring);
  static IdealSet unit(const FiniteRing& ring);

  std::uint64_t ambient() const { return ambient_; }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool contains(Elem e) const { return members_.test(e); }
  bool is_zero() const { return size() == 1; }
  bool is_unit_ideal() const { return size() == members_.universe(); }
  bool is_subset_of(const IdealSet& other) const { return members_.is_subset_of(other.members_); }
  std::vector<Elem> elements() const { return members_.members(); }

  friend bool operator==(const IdealSet&, const IdealSet&) = default;

 private:
  IdealSet(std::uint64_t ambient, ElementSet members)
      : ambient_(ambient), members_(std::move(members)) {}

  std::uint64_t ambient_ = 0;
  ElementSet members_;
};

/// Throws InputError unless `ideal` belongs to `ring`.
void require_ambient(const FiniteRing& ring, const IdealSet& ideal);

/// Smallest additive subgroup containing `base` and every element of
/// `extra`. `base` must already be an additive subgroup.
ElementSet additive_span(const FiniteRing& ring, ElementSet base, std::span<const Elem> extra);

/// Least ideal containing `gens` (empty list gives the zero ideal).
IdealSet ideal_generated(const FiniteRing& ring, std::span<const Elem> gens);
/// x R.
IdealSet principal_ideal(const FiniteRing& ring, Elem x);
/// Some (not necessarily minimal) generating list, picked greedily in index
/// order; at most log2 |ideal| elements.
std::vector<Elem> greedy_generators(const FiniteRing& ring, const IdealSet& ideal);

IdealSet ideal_sum(const FiniteRing& ring, const IdealSet& a, const IdealSet& b);
IdealSet ideal_product(const FiniteRing& ring, const IdealSet& a, const IdealSet& b);
IdealSet ideal_intersection(const FiniteRing& ring, const IdealSet& a, const IdealSet& b);
IdealSet ideal_power(const FiniteRing& ring, const IdealSet& a, unsigned k);
/// (a : b) = {x : x b ⊆ a}.
IdealSet ideal_colon(const FiniteRing& ring, const IdealSet& a, const IdealSet& b);
/// Annihilator of a single element.
IdealSet annihilator(const FiniteRing& ring, Elem x);

/// Image of an ideal under a surjective ring map given as an index function.
IdealSet ideal_image(const FiniteRing& target, const IdealSet& ideal, std::span<const Elem> map);
/// Preimage of an ideal of `target` under `map : source -> target`.
IdealSet ideal_preimage(const FiniteRing& source, const IdealSet& ideal, std::span<const Elem> map);

}  // namespace noethera
