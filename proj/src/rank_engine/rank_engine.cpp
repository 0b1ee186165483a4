#include "noethera/rank_engine.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "noethera/constructors.hpp"
#include "noethera/error.hpp"

namespace noethera {

// ---------------------------------------------------------------- objects

RingObject RingObject::finite(FiniteRing ring) {
  return {std::make_shared<const FiniteRing>(std::move(ring)), {}};
}

RingObject RingObject::quadratic(QuadraticOrder order) { return {order, {}}; }

RingObject RingObject::poly(FiniteRing base) {
  return {PolyOverArtinian{std::make_shared<const FiniteRing>(std::move(base))}, {}};
}

RingObject RingObject::product(std::vector<RingObject> components) {
  if (components.empty()) throw InputError("product of an empty list");
  FormalProduct flat;
  for (auto& c : components) {
    if (auto* p = std::get_if<FormalProduct>(&c.value))
      for (auto& inner : p->components) flat.components.push_back(inner);
    else
      flat.components.push_back(std::move(c));
  }
  if (flat.components.size() == 1) return flat.components.front();
  return {std::move(flat), {}};
}

const FiniteRing* RingObject::as_finite() const {
  auto* p = std::get_if<std::shared_ptr<const FiniteRing>>(&value);
  return p ? p->get() : nullptr;
}
const QuadraticOrder* RingObject::as_quadratic() const { return std::get_if<QuadraticOrder>(&value); }
const PolyOverArtinian* RingObject::as_poly() const { return std::get_if<PolyOverArtinian>(&value); }
const FormalProduct* RingObject::as_product() const { return std::get_if<FormalProduct>(&value); }

std::string RingObject::describe() const {
  if (!text.empty()) return text;
  if (auto* f = as_finite()) return f->presentation().text();
  if (auto* q = as_quadratic()) return q->literal();
  if (auto* p = as_poly()) return "poly(" + p->base->presentation().text() + ")";
  std::string out = "product(";
  const auto& comps = as_product()->components;
  for (std::size_t i = 0; i < comps.size(); ++i) out += (i ? ", " : "") + comps[i].describe();
  return out + ")";
}

// ---------------------------------------------------------------- values

RankValue RankValue::interval(std::size_t lo, std::size_t hi) {
  if (lo > hi) throw InvariantError("rank interval [" + std::to_string(lo) + "," + std::to_string(hi) + "] is empty");
  return lo == hi ? exact(lo) : RankValue{Kind::Interval, lo, hi};
}

std::string RankValue::text() const {
  switch (kind) {
    case Kind::Exact: return std::to_string(lo);
    case Kind::Interval: return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    case Kind::AtLeast: return ">=" + std::to_string(lo);
    case Kind::Infinite: return "infinite";
  }
  return "?";
}

RankValue rank_max(const RankValue& a, const RankValue& b) {
  using K = RankValue::Kind;
  if (a.kind == K::Infinite || b.kind == K::Infinite) return RankValue::infinite();
  const std::size_t lo = std::max(a.lo, b.lo);
  if (a.kind == K::AtLeast || b.kind == K::AtLeast) return RankValue::at_least(lo);
  return RankValue::interval(lo, std::max(a.hi, b.hi));
}

std::string to_string(Dimension d) {
  switch (d) {
    case Dimension::Zero: return "0";
    case Dimension::One: return "1";
    case Dimension::AtLeastTwo: return ">=2";
  }
  return "?";
}

std::string to_string(ComponentTag tag) {
  switch (tag) {
    case ComponentTag::LocalPrincipalArtinian: return "local-principal-Artinian";
    case ComponentTag::DedekindPrincipal: return "Dedekind-principal";
    case ComponentTag::DedekindNonPrincipal: return "Dedekind-non-principal";
    case ComponentTag::Other: return "other";
  }
  return "?";
}

std::string describe_ideal(const FiniteRing& ring, const std::vector<Elem>& generators) {
  if (generators.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + ring.label(generators[i]);
  return out + ")";
}

// ---------------------------------------------------------------- lattices

IdealLattice lattice_for(const FiniteRing& ring, const EngineOptions& opts) {
  if (!opts.cache_dir) return enumerate_ideals(ring, opts.lattice);
  std::ostringstream name;
  name << std::hex << ring.presentation_hash() << ".lattice";
  const auto path = *opts.cache_dir / name.str();
  if (std::filesystem::exists(path)) {
    try {
      return load_lattice_cache(path, ring);
    } catch (const InputError&) {
      // Stale or foreign file: recompute and overwrite.
    }
  }
  auto lattice = enumerate_ideals(ring, opts.lattice);
  std::filesystem::create_directories(*opts.cache_dir);
  save_lattice_cache(path, ring, lattice);
  return lattice;
}

namespace {

struct IdealScan {
  std::size_t best = 0;
  std::optional<GeneratorWitness> witness;
  std::size_t lattice_size = 0;
  bool partial = false;
};

/// max mu over the lattice of `ring`, mu given by `measure`.
template <class Measure>
IdealScan scan_lattice(const FiniteRing& ring, const EngineOptions& opts, Measure&& measure) {
  IdealScan scan;
  std::vector<IdealSet> partial_ideals;
  const std::vector<IdealSet>* ideals = nullptr;
  IdealLattice lattice;
  try {
    lattice = lattice_for(ring, opts);
    ideals = &lattice.ideals();
  } catch (const LatticeBudgetError& e) {
    partial_ideals = e.partial();
    ideals = &partial_ideals;
    scan.partial = true;
  }
  scan.lattice_size = ideals->size();
  for (const auto& ideal : *ideals) {
    auto w = measure(ideal);
    if (!scan.witness || w.count() > scan.best) {
      scan.best = w.count();
      scan.witness = std::move(w);
    }
  }
  return scan;
}

struct FactorAnalysis {
  IdealScan scan;
  /// Maximal ideal of the ambient ring lying over this factor.
  IdealSet ambient_maximal;
};

struct FiniteAnalysis {
  LocalDecomposition decomposition;
  std::vector<FactorAnalysis> factors;
};

FiniteAnalysis analyse_factors(const FiniteRing& ring, const EngineOptions& opts) {
  FiniteAnalysis a{local_decompose(ring, opts.build), {}};
  const auto maxima = maximal_ideals(ring, a.decomposition);
  for (std::size_t i = 0; i < a.decomposition.factors.size(); ++i) {
    const auto& f = a.decomposition.factors[i];
    auto scan = scan_lattice(f.ring, opts, [&](const IdealSet& j) { return mu_nakayama(f, j); });
    a.factors.push_back({std::move(scan), maxima[i]});
  }
  return a;
}

RankReport finite_report(const FiniteRing& ring, const std::string& object, const EngineOptions& opts,
                         bool with_rk) {
  RankReport r;
  r.object = object;
  r.dimension = Dimension::Zero;
  r.finite_rank = true;
  if (ring.is_zero_ring()) {
    r.rk = r.lrk = RankValue::exact(0);
    r.of_local_rank = true;
    r.lattice_size = 1;
    r.notes.push_back("zero ring: rank 0 by convention, no maximal ideals");
    return r;
  }
  const auto analysis = analyse_factors(ring, opts);

  std::size_t lrk = 0;
  bool lrk_partial = false;
  for (std::size_t i = 0; i < analysis.factors.size(); ++i) {
    const auto& fa = analysis.factors[i];
    const auto& f = analysis.decomposition.factors[i];
    lrk_partial = lrk_partial || fa.scan.partial;
    if (!r.lrk_witness || fa.scan.best > lrk) {
      lrk = fa.scan.best;
      std::vector<Elem> lifted;
      for (Elem g : fa.scan.witness->generators) lifted.push_back(f.lift[g]);
      r.lrk_witness = LocalWitness{describe_ideal(ring, greedy_generators(ring, fa.ambient_maximal)),
                                   describe_ideal(ring, lifted), fa.scan.best};
    }
  }
  r.lrk = lrk_partial ? RankValue::at_least(lrk) : RankValue::exact(lrk);
  r.notes.push_back(std::to_string(analysis.factors.size()) + " local factor(s); lrk is the maximum of their ranks");

  if (with_rk) {
    auto scan = scan_lattice(ring, opts, [&](const IdealSet& i) { return mu(ring, analysis.decomposition, i); });
    r.partial = scan.partial;
    r.lattice_size = scan.lattice_size;
    r.rk = scan.partial ? RankValue::at_least(scan.best) : RankValue::exact(scan.best);
    std::vector<std::string> gens;
    for (Elem g : scan.witness->generators) gens.push_back(ring.label(g));
    r.rk_witness = Witness{describe_ideal(ring, greedy_generators(ring, scan.witness->ideal)), gens, scan.best};
    if (scan.partial) r.notes.push_back("lattice enumeration hit its budget; rk is a lower bound");
  } else {
    r.rk = r.lrk;
  }
  if (r.rk.is_exact() && r.lrk.is_exact()) {
    r.of_local_rank = r.rk.lo == r.lrk.lo;
    if (!*r.of_local_rank)
      throw InvariantError("finite ring " + object + " has rk " + r.rk.text() + " but lrk " + r.lrk.text());
  }
  return r;
}

RankReport quadratic_report(const QuadraticOrder& order, const std::string& object, const EngineOptions& opts) {
  const auto q = order_rank_report(order, opts.dedekind);
  RankReport r;
  r.object = object;
  r.rk = RankValue::exact(q.rk);
  r.lrk = RankValue::exact(q.lrk);
  r.of_local_rank = q.of_local_rank;
  r.dimension = Dimension::One;
  r.finite_rank = true;
  std::vector<std::string> gens;
  for (auto g : q.rk_witness_generators) gens.push_back(order.format(g));
  r.rk_witness = Witness{format_ideal(order, q.rk_witness), gens, q.rk};
  r.lrk_witness = LocalWitness{format_ideal(order, q.lrk_witness_prime), format_ideal(order, q.lrk_witness_ideal),
                               q.lrk_witness_mu};
  r.notes.push_back("class number " + std::to_string(q.class_group.class_number));
  r.notes.push_back(q.rk_reason);
  if (!q.singular_primes.empty()) {
    std::string s = "singular primes:";
    for (auto p : q.singular_primes) s += " " + std::to_string(p);
    r.notes.push_back(s);
  }
  if (order.maximal() && !q.dvr_at_sampled_primes)
    throw InvariantError("maximal order " + object + " has a sampled localization that is not a DVR");
  r.notes.push_back(std::string("local mu <= 1 at every sampled non-singular prime: ") +
                    (q.dvr_at_sampled_primes ? "yes" : "no"));
  return r;
}

struct PolyBounds {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t length = 0;
  std::vector<bool> factor_is_field;
  std::vector<std::string> factor_text;
};

PolyBounds poly_bounds(const FiniteRing& base, const EngineOptions& opts) {
  PolyBounds b;
  if (base.is_zero_ring()) return b;
  const auto analysis = analyse_factors(base, opts);
  b.length = composition_length(analysis.decomposition);
  for (std::size_t i = 0; i < analysis.factors.size(); ++i) {
    const auto& f = analysis.decomposition.factors[i];
    const auto h = hilbert_function(f.ring, 1);
    const std::size_t local_length = composition_length(f.ring);
    // A_i = A_i[t]/(t) and the ideal (m, t) needs H(1) + 1 generators locally.
    b.lo = std::max({b.lo, analysis.factors[i].scan.best, h.values[1] + 1});
    b.hi = std::max(b.hi, local_length);
    b.factor_is_field.push_back(f.maximal_ideal.is_zero());
    b.factor_text.push_back("local factor " + std::to_string(i) + " (size " + std::to_string(f.ring.size()) +
                            ", residue field " + std::to_string(f.residue_field_size) + ")");
  }
  return b;
}

RankReport poly_report(const FiniteRing& base, const std::string& object, const EngineOptions& opts) {
  RankReport r;
  r.object = object;
  r.finite_rank = true;
  if (base.is_zero_ring()) {
    r.rk = r.lrk = RankValue::exact(0);
    r.of_local_rank = true;
    r.dimension = Dimension::Zero;
    r.notes.push_back("zero base: A[t] is the zero ring");
    return r;
  }
  const auto b = poly_bounds(base, opts);
  r.dimension = Dimension::One;
  r.rk = RankValue::interval(b.lo, b.hi);
  r.lrk = RankValue::interval(b.lo, b.hi);
  if (r.rk.is_exact()) r.of_local_rank = true;
  r.notes.push_back("rk A[t] <= length(A) = " + std::to_string(b.length) + " (Clark bound); per local factor <= " +
                    std::to_string(b.hi));
  if (!r.rk.is_exact()) r.notes.push_back("exact rank of A[t] over a non-reduced base is not computed");
  return r;
}

RankReport report_for(const RingObject& object, const EngineOptions& opts, bool with_rk);

RankReport product_report(const FormalProduct& p, const std::string& object, const EngineOptions& opts,
                          bool with_rk) {
  RankReport r;
  r.object = object;
  r.dimension = Dimension::Zero;
  bool first = true;
  std::size_t rk_from = 0, lrk_from = 0;
  for (std::size_t i = 0; i < p.components.size(); ++i) {
    auto c = report_for(p.components[i], opts, with_rk);
    if (first) {
      r.rk = c.rk;
      r.lrk = c.lrk;
      first = false;
    } else {
      if (c.rk.lo > r.rk.lo) rk_from = i;
      if (c.lrk.lo > r.lrk.lo) lrk_from = i;
      r.rk = rank_max(r.rk, c.rk);
      r.lrk = rank_max(r.lrk, c.lrk);
    }
    r.dimension = std::max(r.dimension, c.dimension);
    r.partial = r.partial || c.partial;
    r.components.push_back(std::move(c));
  }
  r.finite_rank = r.dimension != Dimension::AtLeastTwo;
  auto prefix = [](std::size_t i) { return "component " + std::to_string(i) + ": "; };
  if (auto& w = r.components[rk_from].rk_witness) {
    r.rk_witness = *w;
    r.rk_witness->ideal = prefix(rk_from) + w->ideal;
  }
  if (auto& w = r.components[lrk_from].lrk_witness) {
    r.lrk_witness = *w;
    r.lrk_witness->maximal_ideal = prefix(lrk_from) + w->maximal_ideal;
  }
  if (r.rk.is_exact() && r.lrk.is_exact()) r.of_local_rank = r.rk.lo == r.lrk.lo;
  r.notes.push_back("rank of a finite product is the maximum over its components");
  return r;
}

RankReport report_for(const RingObject& object, const EngineOptions& opts, bool with_rk) {
  const std::string text = object.describe();
  if (auto* f = object.as_finite()) return finite_report(*f, text, opts, with_rk);
  if (auto* q = object.as_quadratic()) return quadratic_report(*q, text, opts);
  if (auto* p = object.as_poly()) return poly_report(*p->base, text, opts);
  return product_report(*object.as_product(), text, opts, with_rk);
}

// ---------------------------------------------------------------- components

void tag_components(const RingObject& object, const EngineOptions& opts, std::vector<TaggedComponent>& out) {
  const std::string text = object.describe();
  if (auto* f = object.as_finite()) {
    if (f->is_zero_ring()) return;
    const auto analysis = analyse_factors(*f, opts);
    for (std::size_t i = 0; i < analysis.factors.size(); ++i) {
      const auto& factor = analysis.decomposition.factors[i];
      const auto& scan = analysis.factors[i].scan;
      TaggedComponent c;
      c.description = text + " local factor " + std::to_string(i) + " (size " + std::to_string(factor.ring.size()) +
                      ", idempotent " + f->label(factor.idempotent) + ")";
      if (scan.partial) throw BudgetError("classify: lattice of " + c.description + " exceeds the budget");
      if (scan.best <= 1) {
        c.tag = ComponentTag::LocalPrincipalArtinian;
      } else {
        c.tag = ComponentTag::Other;
        c.reason = "component not a PIR";
      }
      out.push_back(std::move(c));
    }
    return;
  }
  if (auto* q = object.as_quadratic()) {
    TaggedComponent c;
    c.description = text;
    if (!q->maximal()) {
      c.tag = ComponentTag::Other;
      c.reason = "component is a one-dimensional non-normal domain, not Dedekind";
    } else {
      const auto h = class_number(*q, opts.dedekind).class_number;
      c.tag = h > 1 ? ComponentTag::DedekindNonPrincipal : ComponentTag::DedekindPrincipal;
    }
    out.push_back(std::move(c));
    return;
  }
  if (auto* p = object.as_poly()) {
    if (p->base->is_zero_ring()) return;
    const auto b = poly_bounds(*p->base, opts);
    for (std::size_t i = 0; i < b.factor_is_field.size(); ++i) {
      TaggedComponent c;
      c.description = text + " over " + b.factor_text[i];
      if (b.factor_is_field[i]) {
        c.tag = ComponentTag::DedekindPrincipal;
      } else {
        c.tag = ComponentTag::Other;
        c.reason = "component A_i[t] is not a domain: its base is not reduced";
      }
      out.push_back(std::move(c));
    }
    return;
  }
  for (const auto& c : object.as_product()->components) tag_components(c, opts, out);
}

}  // namespace

RankReport rank(const RingObject& object, const EngineOptions& opts) { return report_for(object, opts, true); }

RankReport local_rank(const RingObject& object, const EngineOptions& opts) {
  return report_for(object, opts, false);
}

Dimension dimension_flag(const RingObject& object) {
  if (object.as_finite()) return Dimension::Zero;
  if (object.as_quadratic()) return Dimension::One;
  if (auto* p = object.as_poly()) return p->base->is_zero_ring() ? Dimension::Zero : Dimension::One;
  Dimension d = Dimension::Zero;
  for (const auto& c : object.as_product()->components) d = std::max(d, dimension_flag(c));
  return d;
}

Classification classify(const RingObject& object, const EngineOptions& opts) {
  Classification c;
  c.object = object.describe();
  c.dimension = dimension_flag(object);
  tag_components(object, opts, c.components);

  bool all_good = !c.components.empty();
  bool any_non_principal = false;
  for (const auto& comp : c.components) {
    if (comp.tag == ComponentTag::Other) all_good = false;
    if (comp.tag == ComponentTag::DedekindNonPrincipal) any_non_principal = true;
  }
  c.structural_of_local_rank = !(all_good && any_non_principal);

  const auto report = rank(object, opts);
  c.rk = report.rk;
  c.lrk = report.lrk;
  if (c.rk.is_exact() && c.lrk.is_exact()) c.numeric_of_local_rank = c.rk.lo != c.lrk.lo + 1;

  if (c.structural_of_local_rank) {
    for (const auto& comp : c.components)
      if (comp.reason && std::find(c.reasons.begin(), c.reasons.end(), *comp.reason) == c.reasons.end())
        c.reasons.push_back(*comp.reason);
    if (!any_non_principal) c.reasons.push_back("no non-principal component");
    if (c.dimension == Dimension::Zero) c.reasons.push_back("dimension 0");
    if (c.dimension == Dimension::AtLeastTwo) c.reasons.push_back("dimension >= 2");
  }

  auto dump = [&] {
    std::string s = "classify " + c.object + ": structural " +
                    (c.structural_of_local_rank ? "of-local-rank" : "not-of-local-rank") + ", rk " + c.rk.text() +
                    ", lrk " + c.lrk.text() + "; components:";
    for (const auto& comp : c.components) s += " [" + comp.description + ": " + to_string(comp.tag) + "]";
    return s;
  };
  if (c.numeric_of_local_rank && *c.numeric_of_local_rank != c.structural_of_local_rank)
    throw InvariantError("structural and numeric verdicts disagree. " + dump());
  if (!c.structural_of_local_rank && c.rk.is_exact() && c.rk.lo != 2)
    throw InvariantError("a ring that is not of local rank must have rank 2. " + dump());
  c.of_local_rank = c.structural_of_local_rank;
  return c;
}

BoundsReport sandwich(const RankValue& rk, const RankValue& lrk) {
  BoundsReport b{rk, lrk, true, std::nullopt};
  if (!rk.is_finite() || !lrk.is_finite()) return b;
  if (rk.is_exact() && lrk.is_exact()) {
    b.holds = lrk.lo <= rk.lo && rk.lo <= lrk.lo + 1;
    if (b.holds) b.slack = rk.lo - lrk.lo;
  } else {
    const bool rk_open = rk.kind == RankValue::Kind::AtLeast;
    const bool lrk_open = lrk.kind == RankValue::Kind::AtLeast;
    b.holds = (rk_open || lrk.lo <= rk.hi) && (lrk_open || rk.lo <= lrk.hi + 1);
  }
  return b;
}

BoundsReport check_bounds(const RingObject& object, const EngineOptions& opts) {
  const auto r = rank(object, opts);
  return sandwich(r.rk, r.lrk);
}

// ---------------------------------------------------------------- A[t]

namespace {

/// Dense polynomials over a finite field given by tables, ascending.
class FieldPoly {
 public:
  explicit FieldPoly(const FiniteRing& field) : f_(field), inv_(field.size(), field.zero()) {
    for (Elem a = 0; a < f_.size(); ++a)
      for (Elem b = 0; b < f_.size(); ++b)
        if (f_.mul(a, b) == f_.one()) inv_[a] = b;
  }
  using P = std::vector<Elem>;

  Elem one() const { return f_.one(); }
  Elem inverse(Elem a) const { return inv_[a]; }
  void trim(P& p) const {
    while (!p.empty() && p.back() == f_.zero()) p.pop_back();
  }
  P add(const P& a, const P& b) const {
    P out(std::max(a.size(), b.size()), f_.zero());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = f_.add(i < a.size() ? a[i] : f_.zero(), i < b.size() ? b[i] : f_.zero());
    trim(out);
    return out;
  }
  P neg(const P& a) const {
    P out;
    for (Elem c : a) out.push_back(f_.neg(c));
    return out;
  }
  P mul(const P& a, const P& b) const {
    if (a.empty() || b.empty()) return {};
    P out(a.size() + b.size() - 1, f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f_.add(out[i + j], f_.mul(a[i], b[j]));
    trim(out);
    return out;
  }
  /// {quotient, remainder}; b non-zero.
  std::pair<P, P> divmod(P a, const P& b) const {
    P q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, f_.zero());
    const Elem lead_inv = inv_[b.back()];
    while (!a.empty() && a.size() >= b.size()) {
      const std::size_t shift = a.size() - b.size();
      const Elem c = f_.mul(a.back(), lead_inv);
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f_.sub(a[shift + i], f_.mul(c, b[i]));
      trim(a);
    }
    trim(q);
    return {q, a};
  }
  P monic(const P& a) const {
    if (a.empty()) return a;
    const Elem s = inv_[a.back()];
    P out;
    for (Elem c : a) out.push_back(f_.mul(c, s));
    return out;
  }
  std::string text(const P& p) const {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
      if (p[i] == f_.zero()) continue;
      if (!out.empty()) out += "+";
      const bool unit_coeff = p[i] == f_.one();
      if (i == 0 || !unit_coeff) out += f_.label(p[i]);
      if (i > 0) {
        if (!unit_coeff) out += "*";
        out += i == 1 ? "t" : "t^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  const FiniteRing& f_;
  std::vector<Elem> inv_;
};

/// Checks that (f, g) = (d) for d the monic gcd: d = s f + t g and d
/// divides both.
struct GcdCertificate {
  std::vector<Elem> gcd;
  bool ok = false;
};

GcdCertificate certify_gcd(const FieldPoly& k, const std::vector<Elem>& f, const std::vector<Elem>& g) {
  using P = std::vector<Elem>;
  P r0 = f, r1 = g, s0{k.one()}, s1, t0, t1{k.one()};
  k.trim(r0);
  k.trim(r1);
  while (!r1.empty()) {
    auto [q, r] = k.divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, k.add(s0, k.neg(k.mul(q, s1))));
    t0 = std::exchange(t1, k.add(t0, k.neg(k.mul(q, t1))));
  }
  GcdCertificate out;
  if (r0.empty()) {
    out.ok = f.empty() && g.empty();
    return out;
  }
  const P scale{k.inverse(r0.back())};
  out.gcd = k.monic(r0);
  const P combo = k.add(k.mul(k.mul(scale, s0), f), k.mul(k.mul(scale, t0), g));
  out.ok = combo == out.gcd && (f.empty() || k.divmod(f, out.gcd).second.empty()) &&
           (g.empty() || k.divmod(g, out.gcd).second.empty());
  return out;
}

FieldFactorCheck check_field_factor(const FiniteRing& field, std::size_t samples) {
  const FieldPoly k(field);
  FieldFactorCheck c;
  c.field_size = field.size();
  std::mt19937_64 rng(0x706f6c79ull ^ field.size());
  auto random_poly = [&](std::size_t max_degree) {
    std::vector<Elem> p(rng() % (max_degree + 2));
    for (auto& x : p) x = static_cast<Elem>(rng() % field.size());
    k.trim(p);
    return p;
  };
  for (std::size_t i = 0; i < samples; ++i) {
    auto f = random_poly(4), g = random_poly(4);
    if (i % 2 == 1) {
      const auto common = random_poly(2);
      f = k.mul(f, common);
      g = k.mul(g, common);
    }
    if (f.empty() && g.empty()) f = {field.one()};
    const auto cert = certify_gcd(k, f, g);
    ++c.samples;
    c.all_principal = c.all_principal && cert.ok;
    if (c.example.empty() && cert.gcd.size() > 1) c.example = "(" + k.text(f) + ", " + k.text(g) + ") = (" + k.text(cert.gcd) + ")";
  }
  return c;
}

}  // namespace

PolynomialReport polynomial_report(const FiniteRing& base, const EngineOptions& opts) {
  PolynomialReport rep;
  rep.base = base.presentation().text();
  rep.base_size = base.size();
  const auto nil = nilradical(base);
  rep.nilradical_size = nil.size();
  const auto reduced = quotient(base, nil, opts.build);
  rep.reduced_size = reduced.ring.size();
  if (!reduced.ring.is_zero_ring()) {
    const auto dec = local_decompose(reduced.ring, opts.build);
    for (const auto& f : dec.factors) {
      if (!is_field(f.ring)) {
        rep.reduced_is_product_of_fields = false;
        continue;
      }
      rep.field_factors.push_back(check_field_factor(f.ring, opts.poly_samples));
    }
    rep.length = composition_length(base);
  }
  const auto bounds = poly_bounds(base, opts);
  rep.rk = base.is_zero_ring() ? RankValue::exact(0) : RankValue::interval(bounds.lo, bounds.hi);
  rep.lrk = rep.rk;
  auto object = RingObject::poly(base);
  object.text = "poly(" + rep.base + ")";
  rep.classification = classify(object, opts);
  return rep;
}

}  // namespace noethera
