#include <algorithm>

#include "noethera/constructors.hpp"
#include "noethera/dsl.hpp"

namespace noethera::dsl {

namespace {

std::uint64_t reduce(std::int64_t c, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  const std::int64_t r = c % sm;
  return static_cast<std::uint64_t>(r < 0 ? r + sm : r);
}

std::size_t size_of(const Presentation& pres);

struct SizeVisitor {
  std::size_t operator()(const ModularPresentation& m) const { return m.n; }
  std::size_t operator()(const GaloisPresentation& g) const {
    std::size_t n = 1;
    for (std::size_t i = 1; i < g.f.size(); ++i) n *= g.p;
    return n;
  }
  std::size_t operator()(const AlgebraPresentation& a) const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < a.dim; ++i) n *= a.p;
    return n;
  }
  std::size_t operator()(const ProductPresentation& p) const {
    std::size_t n = 1;
    for (const auto& f : p.factors) n *= size_of(f);
    return n;
  }
  std::size_t operator()(const QuotientPresentation& q) const { return q.ideal.universe() / q.ideal.count(); }
  std::size_t operator()(const ExplicitPresentation&) const {
    throw InputError("element literals need a structural presentation");
  }
};

std::size_t size_of(const Presentation& pres) { return std::visit(SizeVisitor{}, pres.value); }

Elem encode_coords(const std::vector<std::int64_t>& coords, std::uint64_t p, std::size_t dim) {
  if (coords.size() != dim)
    throw InputError("coordinate vector needs " + std::to_string(dim) + " entries, got " +
                     std::to_string(coords.size()));
  std::uint64_t idx = 0;
  for (std::size_t i = dim; i-- > 0;) idx = idx * p + reduce(coords[i], p);
  return static_cast<Elem>(idx);
}

Elem resolve(const Presentation& pres, const ElemLiteral& lit);

struct ResolveVisitor {
  const ElemLiteral& lit;

  const PolyLiteral* as_poly() const { return std::get_if<PolyLiteral>(&lit.value); }
  std::optional<std::int64_t> as_integer() const {
    auto* p = as_poly();
    if (!p || p->coeffs.size() > 1) return std::nullopt;
    return p->coeffs.empty() ? 0 : p->coeffs[0];
  }
  [[noreturn]] void reject(const std::string& ring) const {
    throw InputError("element literal " + print(lit) + " does not name an element of " + ring);
  }

  Elem operator()(const ModularPresentation& m) const {
    if (auto k = as_integer()) return static_cast<Elem>(reduce(*k, m.n));
    reject("Z/" + std::to_string(m.n));
  }
  Elem operator()(const GaloisPresentation& g) const {
    const std::size_t d = g.f.size() - 1;
    if (auto* v = std::get_if<VectorLiteral>(&lit.value)) return encode_coords(v->coords, g.p, d);
    auto* p = as_poly();
    if (!p) reject("GF(" + std::to_string(g.p) + ")");
    std::vector<std::uint64_t> c;
    for (auto x : p->coeffs) c.push_back(reduce(x, g.p));
    // Reduce modulo the monic f.
    for (std::size_t k = c.size(); k-- > d;) {
      const std::uint64_t lead = c[k];
      if (lead == 0) continue;
      for (std::size_t i = 0; i <= d; ++i) c[k - d + i] = (c[k - d + i] + (g.p - lead) * g.f[i]) % g.p;
    }
    c.resize(d, 0);
    std::uint64_t idx = 0;
    for (std::size_t i = d; i-- > 0;) idx = idx * g.p + c[i];
    return static_cast<Elem>(idx);
  }
  Elem operator()(const AlgebraPresentation& a) const {
    if (auto* v = std::get_if<VectorLiteral>(&lit.value)) return encode_coords(v->coords, a.p, a.dim);
    if (auto k = as_integer()) return static_cast<Elem>(reduce(*k, a.p));
    reject("a structure algebra (use [c0,...,c" + std::to_string(a.dim - 1) + "])");
  }
  Elem operator()(const ProductPresentation& p) const {
    std::vector<ElemLiteral> parts;
    if (auto* t = std::get_if<TupleLiteral>(&lit.value)) {
      parts = t->parts;
    } else if (as_integer()) {
      parts.assign(p.factors.size(), lit);
    } else {
      reject("a product (use a tuple)");
    }
    if (parts.size() != p.factors.size())
      throw InputError("tuple " + print(lit) + " needs " + std::to_string(p.factors.size()) + " entries");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) idx = idx * size_of(p.factors[i]) + resolve(p.factors[i], parts[i]);
    return static_cast<Elem>(idx);
  }
  Elem operator()(const QuotientPresentation& q) const {
    const FiniteRing parent = realize(*q.parent);
    const Elem e = resolve(*q.parent, lit);
    return quotient(parent, IdealSet::from_members(parent, q.ideal)).map[e];
  }
  Elem operator()(const ExplicitPresentation&) const {
    throw InputError("element literals need a structural presentation");
  }
};

Elem resolve(const Presentation& pres, const ElemLiteral& lit) { return std::visit(ResolveVisitor{lit}, pres.value); }

struct Builder {
  const BuildContext& ctx;

  RingObject operator()(const ZModExpr& z) const { return RingObject::finite(make_zmod(z.n, ctx.build)); }
  RingObject operator()(const GFExpr& g) const {
    return RingObject::finite(make_galois_field(g.p, g.f.coeffs, ctx.build));
  }
  RingObject operator()(const AlgebraExpr& a) const {
    std::filesystem::path path = a.path;
    if (path.is_relative()) path = ctx.base_dir / path;
    const auto file = read_structure_file(path);
    return RingObject::finite(make_structure_algebra(file.p, file.dim, file.constants, ctx.build));
  }
  RingObject operator()(const QuadExpr& q) const { return RingObject::quadratic(make_order(q.d, q.maximal)); }
  RingObject operator()(const ProductExpr& p) const {
    std::vector<RingObject> children;
    for (const auto& c : p.children) children.push_back(build(c, ctx));
    const bool all_finite =
        std::all_of(children.begin(), children.end(), [](const RingObject& o) { return o.as_finite() != nullptr; });
    if (all_finite) {
      std::vector<FiniteRing> rings;
      for (const auto& c : children) rings.push_back(*c.as_finite());
      return RingObject::finite(direct_product(rings, ctx.build));
    }
    return RingObject::product(std::move(children));
  }
  RingObject operator()(const QuotientExpr& q) const {
    const auto child = build(*q.child, ctx);
    const FiniteRing* ring = child.as_finite();
    if (!ring) throw InputError("quot: only finite rings can be quotiented, not " + print(*q.child));
    std::vector<Elem> gens;
    for (const auto& g : q.generators) gens.push_back(resolve_element(*ring, g));
    return RingObject::finite(quotient(*ring, ideal_generated(*ring, gens), ctx.build).ring);
  }
  RingObject operator()(const PolyExpr& p) const {
    const auto child = build(*p.child, ctx);
    const FiniteRing* ring = child.as_finite();
    if (!ring) throw InputError("poly: the base ring must be finite, not " + print(*p.child));
    return RingObject::poly(*ring);
  }
};

}  // namespace

Elem resolve_element(const FiniteRing& ring, const ElemLiteral& literal) {
  if (std::holds_alternative<ExplicitPresentation>(ring.presentation().value)) {
    const std::string text = print(literal);
    const auto& labels = ring.labels();
    auto it = std::find(labels.begin(), labels.end(), text);
    if (it == labels.end()) throw InputError("no element labelled " + text);
    return static_cast<Elem>(it - labels.begin());
  }
  const Elem e = resolve(ring.presentation(), literal);
  if (e >= ring.size()) throw InvariantError("element literal resolved outside the ring");
  return e;
}

RingObject build(const RingExpr& expr, const BuildContext& ctx) {
  auto object = std::visit(Builder{ctx}, expr.node);
  object.text = print(expr);
  return object;
}

}  // namespace noethera::dsl
