#include "noethera/constructors.hpp"

#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "noethera/error.hpp"
#include "noethera/polynomial_text.hpp"

namespace noethera {

namespace {

using Coeffs = std::vector<std::uint64_t>;

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::size_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    n *= base;
    if (n > cap)
      throw BudgetError("ring of size " + std::to_string(base) + "^" + std::to_string(exp) +
                        " exceeds the size cap " + std::to_string(cap));
  }
  return n;
}

std::uint64_t reduce_mod(std::int64_t c, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = c % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic m, coefficients mod p.
Coeffs poly_rem(Coeffs a, const Coeffs& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    a.pop_back();
    trim(a);
  }
  return a;
}

Coeffs poly_quot(Coeffs a, const Coeffs& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  if (a.size() <= dm) return {};
  Coeffs q(a.size() - dm, 0);
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    q[shift] = lead;
    if (lead != 0)
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    a.pop_back();
  }
  trim(q);
  return q;
}

std::string poly_string(const Coeffs& c) {
  return format_polynomial(std::vector<std::int64_t>(c.begin(), c.end()));
}

struct AlgebraTables {
  std::vector<Elem> add;
  std::vector<Elem> mul;
};

// Tables of the F_p-algebra with the given basis products. Index = sum c_i p^i.
AlgebraTables build_algebra_tables(std::uint64_t p, std::size_t dim, std::size_t n,
                                   const StructureConstants& constants) {
  std::vector<Coeffs> digits(n, Coeffs(dim, 0));
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t v = e;
    for (std::size_t i = 0; i < dim; ++i) {
      digits[e][i] = v % p;
      v /= p;
    }
  }
  auto encode = [&](const Coeffs& c) {
    std::size_t idx = 0;
    for (std::size_t i = dim; i-- > 0;) idx = idx * p + c[i];
    return static_cast<Elem>(idx);
  };

  AlgebraTables t;
  t.add.resize(n * n);
  Coeffs tmp(dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < dim; ++i) tmp[i] = (digits[a][i] + digits[b][i]) % p;
      t.add[a * n + b] = encode(tmp);
    }

  // scaled[(k*p + c)*n + b] = (c e_k) * b
  std::vector<Elem> scaled(dim * p * n, 0);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t k = 0; k < dim; ++k) {
      Coeffs prod(dim, 0);
      for (std::size_t j = 0; j < dim; ++j) {
        const std::uint64_t bj = digits[b][j];
        if (!bj) continue;
        const auto& kj = constants[k * dim + j];
        for (std::size_t i = 0; i < dim; ++i) prod[i] = (prod[i] + bj * kj[i]) % p;
      }
      for (std::uint64_t c = 0; c < p; ++c) {
        for (std::size_t i = 0; i < dim; ++i) tmp[i] = (c * prod[i]) % p;
        scaled[(k * p + c) * n + b] = encode(tmp);
      }
    }

  t.mul.assign(n * n, 0);
  std::size_t place = 1;  // p^k for the top digit of a
  std::size_t k = 0;
  for (std::size_t a = 1; a < n; ++a) {
    if (a == place * p) {
      place *= p;
      ++k;
    }
    const std::uint64_t c = a / place;
    const std::size_t rest = a - c * place;
    for (std::size_t b = 0; b < n; ++b)
      t.mul[a * n + b] = t.add[static_cast<std::size_t>(t.mul[rest * n + b]) * n + scaled[(k * p + c) * n + b]];
  }
  return t;
}

std::vector<std::uint64_t> vec_mul(const Coeffs& u, const Coeffs& v, std::size_t dim, std::uint64_t p,
                                   const StructureConstants& c) {
  Coeffs out(dim, 0);
  for (std::size_t a = 0; a < dim; ++a) {
    if (!u[a]) continue;
    for (std::size_t b = 0; b < dim; ++b) {
      if (!v[b]) continue;
      const auto& ab = c[a * dim + b];
      for (std::size_t i = 0; i < dim; ++i) out[i] = (out[i] + u[a] * v[b] % p * ab[i]) % p;
    }
  }
  return out;
}

std::string basis_name(std::size_t i) { return "e" + std::to_string(i); }

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteRing make_zmod(std::uint64_t n, const BuildOptions& opts) {
  if (n == 0) throw InputError("empty modulus: Z/0 is not a finite ring");
  if (n > opts.max_size)
    throw BudgetError("ring of size " + std::to_string(n) + " exceeds the size cap " +
                      std::to_string(opts.max_size));
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint64_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), 0, static_cast<Elem>(1 % n),
                                 Presentation{ModularPresentation{n}}, std::move(labels), opts, TableSource::Derived);
}

FiniteRing make_galois_field(std::uint64_t p, const std::vector<std::int64_t>& f_in,
                             const BuildOptions& opts) {
  if (!is_prime(p)) throw InputError("GF: p = " + std::to_string(p) + " is not prime");
  Coeffs f;
  for (auto c : f_in) f.push_back(reduce_mod(c, p));
  trim(f);
  if (f.size() < 2) throw InputError("GF: f must have degree at least 1");
  if (f.back() != 1) throw InputError("GF: f = " + poly_string(f) + " is not monic");
  const std::size_t d = f.size() - 1;
  const std::size_t n = checked_pow(p, d, opts.max_size);

  // Smallest-degree monic divisor found first is irreducible.
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    const std::uint64_t count = checked_pow(p, k, std::numeric_limits<std::size_t>::max());
    for (std::uint64_t code = 0; code < count; ++code) {
      Coeffs g(k + 1, 0);
      std::uint64_t v = code;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[k] = 1;
      if (!poly_rem(f, g, p).empty()) continue;
      unsigned mult = 0;
      Coeffs rest = f;
      while (rest.size() > 1 && poly_rem(rest, g, p).empty()) {
        rest = poly_quot(rest, g, p);
        ++mult;
      }
      std::string factor = "(" + poly_string(g) + ")";
      if (mult > 1) factor += "^" + std::to_string(mult);
      throw InputError("GF: f = " + poly_string(f) + " is reducible mod " + std::to_string(p) + ": " +
                       factor + " divides f");
    }
  }

  StructureConstants constants(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Coeffs mono(i + j + 1, 0);
      mono[i + j] = 1;
      Coeffs r = poly_rem(mono, f, p);
      r.resize(d, 0);
      constants[i * d + j] = r;
    }
  auto tables = build_algebra_tables(p, d, n, constants);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    Coeffs c(d);
    std::size_t v = e;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = v % p;
      v /= p;
    }
    labels.push_back(poly_string(c));
  }
  return FiniteRing::from_tables(n, std::move(tables.add), std::move(tables.mul), 0,
                                 static_cast<Elem>(n > 1 ? 1 : 0), Presentation{GaloisPresentation{p, f}},
                                 std::move(labels), opts);
}

FiniteRing make_structure_algebra(std::uint64_t p, std::size_t dim, const StructureConstants& in,
                                  const BuildOptions& opts) {
  if (!is_prime(p)) throw InputError("algebra: p = " + std::to_string(p) + " is not prime");
  if (dim == 0) throw InputError("algebra: dimension must be positive");
  if (in.size() != dim * dim)
    throw InputError("algebra: expected " + std::to_string(dim * dim) + " basis products");
  StructureConstants c(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (in[k].size() != dim)
      throw InputError("algebra: product e" + std::to_string(k / dim) + "*e" + std::to_string(k % dim) +
                       " needs " + std::to_string(dim) + " coefficients");
    for (auto v : in[k]) c[k].push_back(v % p);
  }
  const std::size_t n = checked_pow(p, dim, opts.max_size);

  for (std::size_t j = 0; j < dim; ++j) {
    Coeffs unit(dim, 0);
    unit[j] = 1;
    if (c[j] != unit || c[j * dim] != unit)
      throw InputError("algebra: e0 is not the identity (e0*" + basis_name(j) + " != " + basis_name(j) + ")");
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (c[i * dim + j] != c[j * dim + i])
        throw InputError("algebra: commutativity fails at basis pair (" + basis_name(i) + ", " +
                         basis_name(j) + ")");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        Coeffs ek(dim, 0), ei(dim, 0);
        ek[k] = 1;
        ei[i] = 1;
        const auto left = vec_mul(c[i * dim + j], ek, dim, p, c);
        const auto right = vec_mul(ei, c[j * dim + k], dim, p, c);
        if (left != right)
          throw InputError("algebra: associativity fails at basis triple (" + basis_name(i) + ", " +
                           basis_name(j) + ", " + basis_name(k) + ")");
      }

  auto tables = build_algebra_tables(p, dim, n, c);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::string s = "[";
    std::size_t v = e;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i) s += ",";
      s += std::to_string(v % p);
      v /= p;
    }
    labels.push_back(s + "]");
  }
  return FiniteRing::from_tables(n, std::move(tables.add), std::move(tables.mul), 0,
                                 static_cast<Elem>(n > 1 ? 1 : 0),
                                 Presentation{AlgebraPresentation{p, dim, c}}, std::move(labels), opts);
}

FiniteRing direct_product(std::span<const FiniteRing> rings, const BuildOptions& opts) {
  if (rings.empty()) throw InputError("direct product of an empty list");
  std::size_t n = 1;
  for (const auto& r : rings) {
    n *= r.size();
    if (n > opts.max_size)
      throw BudgetError("direct product exceeds the size cap " + std::to_string(opts.max_size));
  }
  const std::size_t k = rings.size();
  std::vector<std::size_t> stride(k);
  {
    std::size_t s = 1;
    for (std::size_t i = k; i-- > 0;) {
      stride[i] = s;
      s *= rings[i].size();
    }
  }
  std::vector<Elem> digits(n * k);
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t i = 0; i < k; ++i)
      digits[e * k + i] = static_cast<Elem>((e / stride[i]) % rings[i].size());

  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t s = 0, m = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const Elem x = digits[a * k + i], y = digits[b * k + i];
        s += rings[i].add(x, y) * stride[i];
        m += rings[i].mul(x, y) * stride[i];
      }
      add[a * n + b] = static_cast<Elem>(s);
      mul[a * n + b] = static_cast<Elem>(m);
    }
  std::size_t zero = 0, one = 0;
  for (std::size_t i = 0; i < k; ++i) {
    zero += rings[i].zero() * stride[i];
    one += rings[i].one() * stride[i];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += rings[i].label(digits[e * k + i]);
    }
    labels.push_back(s + ")");
  }
  ProductPresentation pres;
  for (const auto& r : rings) pres.factors.push_back(r.presentation());
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), static_cast<Elem>(zero),
                                 static_cast<Elem>(one), Presentation{std::move(pres)}, std::move(labels),
                                 opts, TableSource::Derived);
}

QuotientResult quotient(const FiniteRing& ring, const IdealSet& ideal, const BuildOptions& opts) {
  require_ambient(ring, ideal);
  const std::size_t n = ring.size();
  constexpr Elem kUnassigned = ~Elem{0};
  std::vector<Elem> cls(n, kUnassigned);
  std::vector<Elem> reps;
  const auto members = ideal.elements();
  for (Elem r = 0; r < n; ++r) {
    if (cls[r] != kUnassigned) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(r);
    const auto row = ring.add_row(r);
    for (Elem i : members) cls[row[i]] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      add[u * m + v] = cls[ring.add(reps[u], reps[v])];
      mul[u * m + v] = cls[ring.mul(reps[u], reps[v])];
    }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Elem r : reps) labels.push_back(ring.label(r));
  Presentation pres{QuotientPresentation{std::make_shared<const Presentation>(ring.presentation()),
                                         ideal.members()}};
  auto q = FiniteRing::from_tables(m, std::move(add), std::move(mul), cls[ring.zero()], cls[ring.one()],
                                   std::move(pres), std::move(labels), opts, TableSource::Derived);
  return QuotientResult{std::move(q), std::move(cls), std::move(reps)};
}

namespace {

struct RealizeVisitor {
  const BuildOptions& opts;
  FiniteRing operator()(const ModularPresentation& m) const { return make_zmod(m.n, opts); }
  FiniteRing operator()(const GaloisPresentation& g) const {
    return make_galois_field(g.p, std::vector<std::int64_t>(g.f.begin(), g.f.end()), opts);
  }
  FiniteRing operator()(const AlgebraPresentation& a) const {
    return make_structure_algebra(a.p, a.dim, a.constants, opts);
  }
  FiniteRing operator()(const ProductPresentation& p) const {
    std::vector<FiniteRing> factors;
    for (const auto& f : p.factors) factors.push_back(realize(f, opts));
    return direct_product(factors, opts);
  }
  FiniteRing operator()(const QuotientPresentation& q) const {
    if (!q.parent) throw InputError("quotient presentation without parent");
    FiniteRing parent = realize(*q.parent, opts);
    return quotient(parent, IdealSet::from_members(parent, q.ideal), opts).ring;
  }
  FiniteRing operator()(const ExplicitPresentation&) const {
    throw InputError("an explicit presentation carries no construction to replay");
  }
};

}  // namespace

FiniteRing realize(const Presentation& presentation, const BuildOptions& opts) {
  return std::visit(RealizeVisitor{opts}, presentation.value);
}

FiniteRing relabel(const FiniteRing& ring, std::span<const Elem> perm, const BuildOptions& opts) {
  const std::size_t n = ring.size();
  if (perm.size() != n) throw InputError("relabel: permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (Elem e : perm) {
    if (e >= n || seen[e]) throw InputError("relabel: not a permutation");
    seen[e] = true;
  }
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[perm[a]] = ring.label(a);
    for (Elem b = 0; b < n; ++b) {
      add[std::size_t{perm[a]} * n + perm[b]] = perm[ring.add(a, b)];
      mul[std::size_t{perm[a]} * n + perm[b]] = perm[ring.mul(a, b)];
    }
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), perm[ring.zero()], perm[ring.one()],
                                 Presentation{ExplicitPresentation{}}, std::move(labels), opts, TableSource::Derived);
}

StructureFile parse_structure_constants(std::istream& in) {
  StructureFile out;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::vector<bool> seen;
  auto fail = [&](const std::string& msg) {
    throw InputError("structure constants, line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!have_header) {
      long long p = 0, dim = 0;
      if (!(ls >> p >> dim)) fail("expected header 'p dim'");
      std::string extra;
      if (ls >> extra) fail("trailing text after header");
      if (p < 2 || dim < 1) fail("header needs p >= 2 and dim >= 1");
      out.p = static_cast<std::uint64_t>(p);
      out.dim = static_cast<std::size_t>(dim);
      out.constants.assign(out.dim * out.dim, {});
      seen.assign(out.dim * out.dim, false);
      have_header = true;
      continue;
    }
    long long i = 0, j = 0;
    std::string colon;
    if (!(ls >> i >> j >> colon) || colon != ":") fail("expected 'i j : c_0 ... c_{dim-1}'");
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= out.dim || static_cast<std::size_t>(j) >= out.dim)
      fail("basis index out of range");
    const std::size_t slot = static_cast<std::size_t>(i) * out.dim + static_cast<std::size_t>(j);
    if (seen[slot]) fail("duplicate entry for e" + std::to_string(i) + "*e" + std::to_string(j));
    std::vector<std::uint64_t> coeffs;
    long long c;
    while (ls >> c) coeffs.push_back(reduce_mod(c, out.p));
    if (!ls.eof()) fail("non-integer coefficient");
    if (coeffs.size() != out.dim) fail("expected " + std::to_string(out.dim) + " coefficients");
    out.constants[slot] = std::move(coeffs);
    seen[slot] = true;
  }
  if (!have_header) throw InputError("structure constants: missing header 'p dim'");
  for (std::size_t s = 0; s < seen.size(); ++s)
    if (!seen[s])
      throw InputError("structure constants: missing entry for e" + std::to_string(s / out.dim) + "*e" +
                       std::to_string(s % out.dim));
  return out;
}

StructureFile read_structure_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open structure-constant file " + path.string());
  return parse_structure_constants(in);
}

}  // namespace noethera
