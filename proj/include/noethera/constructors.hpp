#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <vector>

#include "noethera/finite_ring.hpp"
#include "noethera/ideal.hpp"

namespace noethera {

/// Z/n with labels "0".."n-1"; n = 1 is the zero ring.
FiniteRing make_zmod(std::uint64_t n, const BuildOptions& opts = {});

/// F_p[x]/(f) for f monic and irreducible mod p; `f` is ascending and may
/// hold negative coefficients. Element index is sum c_i p^i.
FiniteRing make_galois_field(std::uint64_t p, const std::vector<std::int64_t>& f,
                             const BuildOptions& opts = {});

/// Structure constants: constants[i*dim + j] holds the coordinates of e_i e_j.
using StructureConstants = std::vector<std::vector<std::uint64_t>>;

/// F_p-algebra on p^dim elements, e_0 = 1. Basis-level identity,
/// commutativity and associativity are checked first (errors name the basis
/// triple), then the generic table validation runs.
FiniteRing make_structure_algebra(std::uint64_t p, std::size_t dim, const StructureConstants& constants,
                                  const BuildOptions& opts = {});

/// Componentwise tables; index is row-major with the last factor fastest.
FiniteRing direct_product(std::span<const FiniteRing> rings, const BuildOptions& opts = {});

struct QuotientResult {
  FiniteRing ring;
  /// Element of the parent -> element of the quotient.
  std::vector<Elem> map;
  /// Quotient element -> smallest parent index in its coset.
  std::vector<Elem> representatives;
};

/// Coset ring R/I; cosets are numbered in increasing order of their smallest
/// member, which is also the representative.
QuotientResult quotient(const FiniteRing& ring, const IdealSet& ideal, const BuildOptions& opts = {});

/// Rebuilds a ring from a structural presentation.
FiniteRing realize(const Presentation& presentation, const BuildOptions& opts = {});

/// Same ring with element i renamed to perm[i]. The result carries an
/// explicit presentation.
FiniteRing relabel(const FiniteRing& ring, std::span<const Elem> perm, const BuildOptions& opts = {});

bool is_prime(std::uint64_t n);

/// Parses the structure-constant text format:
///   p dim
///   i j : c_0 ... c_{dim-1}      (dim^2 lines, any order)
/// Comments start with '#'.
struct StructureFile {
  std::uint64_t p = 0;
  std::size_t dim = 0;
  StructureConstants constants;
};
StructureFile parse_structure_constants(std::istream& in);
StructureFile read_structure_file(const std::filesystem::path& path);

}  // namespace noethera
