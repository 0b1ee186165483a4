#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "noethera/error.hpp"
#include "noethera/finite_ring.hpp"
#include "noethera/rank_engine.hpp"

namespace noethera::dsl {

// Element literals: an integer polynomial in x, a coordinate vector
// [c0,c1,...] of a structure algebra, or a tuple (a, b, ...) for products.
struct ElemLiteral;

struct PolyLiteral {
  /// Ascending, no trailing zeros; empty is 0.
  std::vector<std::int64_t> coeffs;
  friend bool operator==(const PolyLiteral&, const PolyLiteral&) = default;
};

struct VectorLiteral {
  std::vector<std::int64_t> coords;
  friend bool operator==(const VectorLiteral&, const VectorLiteral&) = default;
};

struct TupleLiteral {
  std::vector<ElemLiteral> parts;
  friend bool operator==(const TupleLiteral&, const TupleLiteral&);
};

struct ElemLiteral {
  std::variant<PolyLiteral, VectorLiteral, TupleLiteral> value;
  friend bool operator==(const ElemLiteral&, const ElemLiteral&) = default;
};

struct RingExpr;

struct ZModExpr {
  std::uint64_t n = 0;
  friend bool operator==(const ZModExpr&, const ZModExpr&) = default;
};
struct GFExpr {
  std::uint64_t p = 0;
  PolyLiteral f;
  friend bool operator==(const GFExpr&, const GFExpr&) = default;
};
struct AlgebraExpr {
  std::string path;
  friend bool operator==(const AlgebraExpr&, const AlgebraExpr&) = default;
};
/// Z[sqrt(d)] is maximal iff d != 1 mod 4; O(d) is always the maximal order.
struct QuadExpr {
  std::int64_t d = -1;
  bool maximal = true;
  friend bool operator==(const QuadExpr&, const QuadExpr&) = default;
};
struct ProductExpr {
  std::vector<RingExpr> children;
  friend bool operator==(const ProductExpr&, const ProductExpr&);
};
struct QuotientExpr {
  std::shared_ptr<const RingExpr> child;
  std::vector<ElemLiteral> generators;
  friend bool operator==(const QuotientExpr&, const QuotientExpr&);
};
struct PolyExpr {
  std::shared_ptr<const RingExpr> child;
  friend bool operator==(const PolyExpr&, const PolyExpr&);
};

struct RingExpr {
  std::variant<ZModExpr, GFExpr, AlgebraExpr, QuadExpr, ProductExpr, QuotientExpr, PolyExpr> node;
  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

/// Syntax error with 1-based line and column.
class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

RingExpr parse(std::string_view text);
/// Comma-separated element literals, e.g. "x, y" or "(2, 0), (0, 1)".
std::vector<ElemLiteral> parse_elements(std::string_view text);

std::string print(const RingExpr& expr);
std::string print(const ElemLiteral& literal);

struct BuildContext {
  BuildOptions build;
  /// Relative algebra(...) paths resolve against this directory.
  std::filesystem::path base_dir = ".";
};

/// Constructs the ring object; products of finite rings become one finite ring.
RingObject build(const RingExpr& expr, const BuildContext& ctx = {});

/// Element of `ring` named by a literal, interpreted through the ring's presentation.
Elem resolve_element(const FiniteRing& ring, const ElemLiteral& literal);

/// Random well-formed expression of bounded depth, for round-trip testing.
RingExpr random_expr(std::mt19937_64& rng, unsigned max_depth = 3);

}  // namespace noethera::dsl
