#pragma once

#include <optional>
#include <vector>

#include "noethera/finite_ring.hpp"

namespace noethera {

/// Brute-force ring isomorphism search for small rings: picks a greedy ring
/// generating set of `a` and tries every image tuple in `b`. Intended for
/// sizes up to a few dozen elements.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b);

/// Subring generated by `gens` (closure under +, * and containing 1).
ElementSet generated_subring(const FiniteRing& ring, const std::vector<Elem>& gens);

}  // namespace noethera
