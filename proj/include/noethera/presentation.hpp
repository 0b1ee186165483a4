#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "noethera/element_set.hpp"

namespace noethera {

struct Presentation;

struct ModularPresentation {
  std::uint64_t n = 1;
};

/// F_p[x]/(f); `f` holds coefficients in ascending degree, reduced mod p.
struct GaloisPresentation {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> f;
};

/// F_p-algebra with basis e_0..e_{dim-1}; `constants[i*dim + j]` is the
/// coordinate vector of e_i e_j. e_0 is the identity.
struct AlgebraPresentation {
  std::uint64_t p = 2;
  std::size_t dim = 1;
  std::vector<std::vector<std::uint64_t>> constants;
};

struct ProductPresentation {
  std::vector<Presentation> factors;
};

struct QuotientPresentation {
  std::shared_ptr<const Presentation> parent;
  ElementSet ideal;
};

/// Tables with no structural description, e.g. after relabelling elements.
struct ExplicitPresentation {};

struct Presentation {
  std::variant<ModularPresentation, GaloisPresentation, AlgebraPresentation, ProductPresentation,
               QuotientPresentation, ExplicitPresentation>
      value;

  bool structural() const;
  /// Canonical one-line description; also the input of `presentation_hash`.
  std::string text() const;
};

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace noethera
