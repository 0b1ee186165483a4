#include "noethera/local_structure.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "noethera/error.hpp"

namespace noethera {

namespace {

unsigned ceil_log2(std::size_t n) {
  unsigned k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

// log_q(ratio), which must be an exact power.
std::size_t exact_log(std::size_t ratio, std::size_t q, const char* what) {
  std::size_t d = 0;
  while (ratio > 1) {
    if (q < 2 || ratio % q != 0) throw InvariantError(std::string(what) + ": index is not a power of the residue field size");
    ratio /= q;
    ++d;
  }
  return d;
}

ElementSet nonunit_set(const FiniteRing& ring) {
  ElementSet s(ring.size());
  for (Elem x = 0; x < ring.size(); ++x)
    if (!ring.is_unit(x)) s.set(x);
  return s;
}

}  // namespace

IdealSet nilradical(const FiniteRing& ring) {
  const unsigned steps = ceil_log2(ring.size()) + 1;
  ElementSet s(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) {
    Elem y = x;
    for (unsigned i = 0; i < steps && y != ring.zero(); ++i) y = ring.mul(y, y);
    if (y == ring.zero()) s.set(x);
  }
  return IdealSet::from_members(ring, std::move(s));
}

std::optional<IdealSet> maximal_ideal_if_local(const FiniteRing& ring) {
  if (ring.is_zero_ring()) return std::nullopt;
  ElementSet s = nonunit_set(ring);
  const auto elems = s.members();
  for (Elem x : elems)
    for (Elem y : elems)
      if (!s.test(ring.add(x, y))) return std::nullopt;
  return IdealSet::trusted(ring, std::move(s));
}

bool is_local(const FiniteRing& ring) { return maximal_ideal_if_local(ring).has_value(); }

bool is_field(const FiniteRing& ring) {
  if (ring.is_zero_ring()) return false;
  for (Elem x = 0; x < ring.size(); ++x)
    if (x != ring.zero() && !ring.is_unit(x)) return false;
  return true;
}

std::vector<Elem> primitive_idempotents(const FiniteRing& ring, const BuildOptions& opts) {
  if (ring.is_zero_ring()) return {};
  const IdealSet nil = nilradical(ring);
  const QuotientResult reduced = quotient(ring, nil, opts);
  const FiniteRing& q = reduced.ring;

  std::vector<Elem> idem;
  for (Elem x = 0; x < q.size(); ++x)
    if (q.mul(x, x) == x) idem.push_back(x);
  std::vector<Elem> primitive;
  for (Elem e : idem) {
    if (e == q.zero()) continue;
    bool minimal = true;
    for (Elem f : idem)
      if (f != q.zero() && f != e && q.mul(f, e) == f) {
        minimal = false;
        break;
      }
    if (minimal) primitive.push_back(e);
  }

  const unsigned max_iter = ceil_log2(ring.size()) + 2;
  std::vector<Elem> lifted;
  for (Elem e_bar : primitive) {
    Elem e = reduced.representatives[e_bar];
    for (unsigned i = 0; i < max_iter && ring.mul(e, e) != e; ++i) {
      const Elem e2 = ring.mul(e, e);
      const Elem e3 = ring.mul(e2, e);
      e = ring.sub(ring.add(ring.add(e2, e2), e2), ring.add(e3, e3));
    }
    if (ring.mul(e, e) != e) throw InvariantError("idempotent lifting did not converge");
    lifted.push_back(e);
  }
  std::sort(lifted.begin(), lifted.end());

  Elem sum = ring.zero();
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    sum = ring.add(sum, lifted[i]);
    for (std::size_t j = i + 1; j < lifted.size(); ++j)
      if (ring.mul(lifted[i], lifted[j]) != ring.zero())
        throw InvariantError("lifted idempotents are not orthogonal");
  }
  if (sum != ring.one()) throw InvariantError("lifted idempotents do not sum to 1");
  return lifted;
}

std::vector<Elem> LocalDecomposition::idempotents() const {
  std::vector<Elem> out;
  for (const auto& f : factors) out.push_back(f.idempotent);
  return out;
}

LocalDecomposition local_decompose(const FiniteRing& ring, const BuildOptions& opts) {
  LocalDecomposition d{ring.content_hash(), {}};
  std::size_t product = 1;
  for (Elem e : primitive_idempotents(ring, opts)) {
    const Elem complement = ring.sub(ring.one(), e);
    QuotientResult q = quotient(ring, principal_ideal(ring, complement), opts);
    auto m = maximal_ideal_if_local(q.ring);
    if (!m) throw InvariantError("factor e R for e = " + ring.label(e) + " is not local");
    std::vector<Elem> lift(q.ring.size());
    for (Elem f = 0; f < q.ring.size(); ++f) lift[f] = ring.mul(e, q.representatives[f]);
    auto gens = greedy_generators(q.ring, *m);
    const std::size_t residue = q.ring.size() / m->size();
    product *= q.ring.size();
    d.factors.push_back(LocalFactor{std::move(q.ring), e, std::move(q.map), std::move(lift), std::move(*m),
                                    std::move(gens), residue});
  }
  if (product != ring.size()) throw InvariantError("local factor sizes do not multiply to |R|");
  return d;
}

std::vector<IdealSet> maximal_ideals(const FiniteRing& ring, const LocalDecomposition& decomposition) {
  if (decomposition.ambient != ring.content_hash()) throw InputError("decomposition of a different ring");
  std::vector<IdealSet> out;
  for (const auto& f : decomposition.factors) out.push_back(ideal_preimage(ring, f.maximal_ideal, f.projection));
  return out;
}

ResidueField residue_field(const FiniteRing& local, const BuildOptions& opts) {
  auto m = maximal_ideal_if_local(local);
  if (!m) throw InputError("residue field requires a local ring; use local_decompose first");
  QuotientResult q = quotient(local, *m, opts);
  if (!is_field(q.ring)) throw InvariantError("R/m is not a field");
  return {std::move(q.ring), std::move(q.map)};
}

namespace {

GeneratorWitness nakayama(const FiniteRing& ring, const IdealSet& m, const std::vector<Elem>& m_gens,
                          std::size_t residue, const IdealSet& ideal) {
  require_ambient(ring, ideal);
  if (ideal.is_zero()) return {ideal, {}};
  // mI = sum of g I over generators g of m.
  ElementSet mi = IdealSet::zero(ring).members();
  const auto elems = ideal.elements();
  std::vector<Elem> scaled(elems.size());
  for (Elem g : m_gens) {
    const auto row = ring.mul_row(g);
    for (std::size_t i = 0; i < elems.size(); ++i) scaled[i] = row[elems[i]];
    mi = additive_span(ring, std::move(mi), scaled);
  }
  (void)m;
  const std::size_t dim = exact_log(ideal.size() / mi.count(), residue, "mu_nakayama");

  GeneratorWitness w{ideal, {}};
  ElementSet span = mi;
  ideal.members().for_each([&](Elem x) {
    if (span.test(x)) return;
    w.generators.push_back(x);
    span = additive_span(ring, std::move(span), ring.mul_row(x));
  });
  if (w.generators.size() != dim)
    throw InvariantError("mu_nakayama: lifted basis has " + std::to_string(w.generators.size()) +
                         " elements, expected " + std::to_string(dim));
  if (!(ideal_generated(ring, w.generators) == ideal))
    throw InvariantError("mu_nakayama: lifted basis does not generate the ideal");
  return w;
}

}  // namespace

GeneratorWitness mu_nakayama(const FiniteRing& local, const IdealSet& ideal) {
  auto m = maximal_ideal_if_local(local);
  if (!m) throw InputError("mu_nakayama requires a local ring; use local_decompose first");
  const auto gens = greedy_generators(local, *m);
  return nakayama(local, *m, gens, local.size() / m->size(), ideal);
}

GeneratorWitness mu_nakayama(const LocalFactor& factor, const IdealSet& ideal) {
  return nakayama(factor.ring, factor.maximal_ideal, factor.maximal_generators, factor.residue_field_size, ideal);
}

GeneratorWitness mu(const FiniteRing& ring, const IdealSet& ideal) {
  return mu(ring, local_decompose(ring), ideal);
}

GeneratorWitness mu(const FiniteRing& ring, const LocalDecomposition& decomposition, const IdealSet& ideal) {
  require_ambient(ring, ideal);
  if (decomposition.ambient != ring.content_hash()) throw InputError("decomposition of a different ring");
  if (ideal.is_zero()) return {ideal, {}};
  std::vector<GeneratorWitness> local;
  std::size_t k = 0;
  for (const auto& f : decomposition.factors) {
    local.push_back(mu_nakayama(f, ideal_image(f.ring, ideal, f.projection)));
    k = std::max(k, local.back().count());
  }
  GeneratorWitness w{ideal, std::vector<Elem>(k, ring.zero())};
  for (std::size_t i = 0; i < local.size(); ++i)
    for (std::size_t t = 0; t < local[i].count(); ++t)
      w.generators[t] = ring.add(w.generators[t], decomposition.factors[i].lift[local[i].generators[t]]);
  if (!(ideal_generated(ring, w.generators) == ideal))
    throw InvariantError("mu: CRT-assembled witness does not generate the ideal");
  return w;
}

HilbertFunction hilbert_function(const FiniteRing& local, std::size_t n_max) {
  auto m = maximal_ideal_if_local(local);
  if (!m) throw InputError("hilbert_function requires a local ring; use local_decompose first");
  HilbertFunction h;
  h.residue_field_size = local.size() / m->size();
  IdealSet power = IdealSet::unit(local);
  for (std::size_t n = 0; n <= n_max; ++n) {
    IdealSet next = ideal_product(local, *m, power);
    h.values.push_back(exact_log(power.size() / next.size(), h.residue_field_size, "hilbert_function"));
    if (n >= 1 && h.values.back() == 0 && !h.first_zero) h.first_zero = n;
    power = std::move(next);
  }
  const std::size_t end = h.first_zero ? *h.first_zero : h.values.size();
  if (end >= 2) {
    std::size_t start = end - 1;
    while (start > 1 && h.values[start - 1] == h.values[end - 1]) --start;
    h.stabilized = HilbertFunction::Window{start, end - 1, h.values[end - 1]};
  }
  return h;
}

PrincipalIdealRingCheck is_principal_ideal_ring(const FiniteRing& ring, const LatticeOptions& opts) {
  const auto lattice = enumerate_ideals(ring, opts);
  const auto decomposition = local_decompose(ring);
  for (const auto& ideal : lattice.ideals()) {
    auto w = mu(ring, decomposition, ideal);
    if (w.count() > 1) return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

std::size_t composition_length(const LocalDecomposition& decomposition) {
  std::size_t length = 0;
  for (const auto& f : decomposition.factors) {
    IdealSet socle = IdealSet::zero(f.ring);
    while (!socle.is_unit_ideal()) {
      IdealSet next = ideal_colon(f.ring, socle, f.maximal_ideal);
      if (next == socle) throw InvariantError("socle series stalled");
      length += exact_log(next.size() / socle.size(), f.residue_field_size, "composition_length");
      socle = std::move(next);
    }
  }
  return length;
}

std::size_t composition_length(const FiniteRing& ring) { return composition_length(local_decompose(ring)); }

RingFingerprint fingerprint(const FiniteRing& ring) {
  RingFingerprint fp;
  fp.size = ring.size();
  fp.characteristic = ring.characteristic();
  ElementSet squares(ring.size());
  for (Elem x = 0; x < ring.size(); ++x) {
    if (ring.is_unit(x)) ++fp.units;
    if (ring.mul(x, x) == x) ++fp.idempotents;
    squares.set(ring.mul(x, x));
    fp.additive_orders.push_back(ring.additive_order(x));
  }
  std::sort(fp.additive_orders.begin(), fp.additive_orders.end());
  fp.square_image = squares.count();
  fp.nilpotents = nilradical(ring).size();
  fp.principal_ideals = principal_ideals(ring).size();
  const auto d = local_decompose(ring);
  for (const auto& f : d.factors) {
    fp.residue_field_sizes.push_back(f.residue_field_size);
    fp.hilbert.push_back(hilbert_function(f.ring, ceil_log2(f.ring.size()) + 1).values);
  }
  std::sort(fp.residue_field_sizes.begin(), fp.residue_field_sizes.end());
  std::sort(fp.hilbert.begin(), fp.hilbert.end());
  return fp;
}

}  // namespace noethera
