#include "noethera/isomorphism.hpp"

namespace noethera {

ElementSet generated_subring(const FiniteRing& ring, const std::vector<Elem>& gens) {
  ElementSet seen(ring.size());
  std::vector<Elem> list;
  auto push = [&](Elem e) {
    if (!seen.test(e)) {
      seen.set(e);
      list.push_back(e);
    }
  };
  push(ring.zero());
  push(ring.one());
  for (Elem g : gens) push(g);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      push(ring.add(list[i], list[j]));
      push(ring.mul(list[i], list[j]));
    }
  return seen;
}

namespace {

std::vector<Elem> ring_generators(const FiniteRing& ring) {
  std::vector<Elem> gens;
  ElementSet span = generated_subring(ring, gens);
  for (Elem e = 0; e < ring.size(); ++e) {
    if (span.test(e)) continue;
    gens.push_back(e);
    span = generated_subring(ring, gens);
  }
  return gens;
}

// Extends a partial assignment along all sums and products; nullopt on a
// conflict or a non-injective result.
std::optional<std::vector<Elem>> extend(const FiniteRing& a, const FiniteRing& b,
                                        const std::vector<Elem>& gens, const std::vector<Elem>& images) {
  constexpr Elem kNone = ~Elem{0};
  std::vector<Elem> map(a.size(), kNone);
  std::vector<Elem> list;
  auto assign = [&](Elem x, Elem y) {
    if (map[x] == kNone) {
      map[x] = y;
      list.push_back(x);
      return true;
    }
    return map[x] == y;
  };
  if (!assign(a.zero(), b.zero()) || !assign(a.one(), b.one())) return std::nullopt;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!assign(gens[i], images[i])) return std::nullopt;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem x = list[i], y = list[j];
      if (!assign(a.add(x, y), b.add(map[x], map[y]))) return std::nullopt;
      if (!assign(a.mul(x, y), b.mul(map[x], map[y]))) return std::nullopt;
    }
  if (list.size() != a.size()) return std::nullopt;
  std::vector<bool> hit(b.size(), false);
  for (Elem y : map) {
    if (hit[y]) return std::nullopt;
    hit[y] = true;
  }
  return map;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.size() != b.size() || a.characteristic() != b.characteristic()) return std::nullopt;
  const auto gens = ring_generators(a);
  std::vector<Elem> images(gens.size(), 0);
  while (true) {
    bool plausible = true;
    for (std::size_t i = 0; i < gens.size() && plausible; ++i)
      plausible = a.additive_order(gens[i]) == b.additive_order(images[i]);
    if (plausible)
      if (auto m = extend(a, b, gens, images)) return m;
    std::size_t pos = 0;
    while (pos < images.size() && ++images[pos] == b.size()) images[pos++] = 0;
    if (pos == images.size()) return std::nullopt;
  }
}

}  // namespace noethera
