#include "noethera/ideal.hpp"

#include "noethera/error.hpp"

namespace noethera {

IdealSet IdealSet::from_members(const FiniteRing& ring, ElementSet members) {
  if (members.universe() != ring.size()) throw InputError("ideal bitset size does not match ring");
  if (!members.test(ring.zero())) throw InputError("set is not an ideal: missing zero");
  const auto elems = members.members();
  for (Elem x : elems) {
    for (Elem y : elems)
      if (!members.test(ring.add(x, y)))
        throw InputError("set is not an ideal: not closed under addition at (" + ring.label(x) +
                         ", " + ring.label(y) + ")");
    for (Elem r : ring.mul_row(x))
      if (!members.test(r))
        throw InputError("set is not an ideal: not closed under multiplication by ring elements at " +
                         ring.label(x));
  }
  return IdealSet(ring.content_hash(), std::move(members));
}

IdealSet IdealSet::from_elements(const FiniteRing& ring, std::span<const Elem> elems) {
  ElementSet s(ring.size());
  for (Elem e : elems) {
    if (e >= ring.size()) throw InputError("element index out of range");
    s.set(e);
  }
  return from_members(ring, std::move(s));
}

IdealSet IdealSet::zero(const FiniteRing& ring) {
  ElementSet s(ring.size());
  s.set(ring.zero());
  return IdealSet(ring.content_hash(), std::move(s));
}

IdealSet IdealSet::unit(const FiniteRing& ring) {
  ElementSet s(ring.size());
  for (Elem e = 0; e < ring.size(); ++e) s.set(e);
  return IdealSet(ring.content_hash(), std::move(s));
}

void require_ambient(const FiniteRing& ring, const IdealSet& ideal) {
  if (ideal.ambient() != ring.content_hash() || ideal.members().universe() != ring.size())
    throw InputError("ideal belongs to a different ring (ambient mismatch)");
}

ElementSet additive_span(const FiniteRing& ring, ElementSet base, std::span<const Elem> extra) {
  std::vector<Elem> current;
  for (Elem x : extra) {
    if (base.test(x)) continue;
    current = base.members();
    ElementSet grown = base;
    for (Elem y = x; !base.test(y); y = ring.add(y, x)) {
      const auto row = ring.add_row(y);
      for (Elem s : current) grown.set(row[s]);
    }
    base = std::move(grown);
  }
  return base;
}

IdealSet ideal_generated(const FiniteRing& ring, std::span<const Elem> gens) {
  ElementSet s(ring.size());
  s.set(ring.zero());
  for (Elem g : gens) {
    if (g >= ring.size()) throw InputError("generator index out of range");
    s = additive_span(ring, std::move(s), ring.mul_row(g));
  }
  return IdealSet::trusted(ring, std::move(s));
}

IdealSet principal_ideal(const FiniteRing& ring, Elem x) {
  ElementSet s(ring.size());
  for (Elem y : ring.mul_row(x)) s.set(y);
  return IdealSet::trusted(ring, std::move(s));
}

std::vector<Elem> greedy_generators(const FiniteRing& ring, const IdealSet& ideal) {
  require_ambient(ring, ideal);
  std::vector<Elem> gens;
  ElementSet s(ring.size());
  s.set(ring.zero());
  ideal.members().for_each([&](Elem x) {
    if (s.test(x)) return;
    gens.push_back(x);
    s = additive_span(ring, std::move(s), ring.mul_row(x));
  });
  return gens;
}

IdealSet ideal_sum(const FiniteRing& ring, const IdealSet& a, const IdealSet& b) {
  require_ambient(ring, a);
  require_ambient(ring, b);
  const auto eb = b.elements();
  return IdealSet::trusted(ring, additive_span(ring, a.members(), eb));
}

IdealSet ideal_product(const FiniteRing& ring, const IdealSet& a, const IdealSet& b) {
  require_ambient(ring, a);
  require_ambient(ring, b);
  ElementSet s(ring.size());
  s.set(ring.zero());
  const auto eb = b.elements();
  std::vector<Elem> products(eb.size());
  for (Elem g : greedy_generators(ring, a)) {
    const auto row = ring.mul_row(g);
    for (std::size_t i = 0; i < eb.size(); ++i) products[i] = row[eb[i]];
    s = additive_span(ring, std::move(s), products);
  }
  return IdealSet::trusted(ring, std::move(s));
}

IdealSet ideal_intersection(const FiniteRing& ring, const IdealSet& a, const IdealSet& b) {
  require_ambient(ring, a);
  require_ambient(ring, b);
  ElementSet s = a.members();
  s &= b.members();
  return IdealSet::trusted(ring, std::move(s));
}

IdealSet ideal_power(const FiniteRing& ring, const IdealSet& a, unsigned k) {
  IdealSet result = IdealSet::unit(ring);
  for (unsigned i = 0; i < k; ++i) {
    IdealSet next = ideal_product(ring, result, a);
    if (next == result) break;
    result = std::move(next);
  }
  return result;
}

IdealSet ideal_colon(const FiniteRing& ring, const IdealSet& a, const IdealSet& b) {
  require_ambient(ring, a);
  require_ambient(ring, b);
  const auto gens = greedy_generators(ring, b);
  ElementSet s(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) {
    bool inside = true;
    for (Elem g : gens)
      if (!a.contains(ring.mul(x, g))) {
        inside = false;
        break;
      }
    if (inside) s.set(x);
  }
  return IdealSet::trusted(ring, std::move(s));
}

IdealSet annihilator(const FiniteRing& ring, Elem x) {
  ElementSet s(ring.size());
  const auto row = ring.mul_row(x);
  for (Elem r = 0; r < ring.size(); ++r)
    if (row[r] == ring.zero()) s.set(r);
  return IdealSet::trusted(ring, std::move(s));
}

IdealSet ideal_image(const FiniteRing& target, const IdealSet& ideal, std::span<const Elem> map) {
  ElementSet s(target.size());
  ideal.members().for_each([&](Elem e) { s.set(map[e]); });
  return IdealSet::trusted(target, std::move(s));
}

IdealSet ideal_preimage(const FiniteRing& source, const IdealSet& ideal, std::span<const Elem> map) {
  ElementSet s(source.size());
  for (Elem e = 0; e < source.size(); ++e)
    if (ideal.contains(map[e])) s.set(e);
  return IdealSet::trusted(source, std::move(s));
}

}  // namespace noethera
