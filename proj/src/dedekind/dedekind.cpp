#include "noethera/dedekind.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "noethera/constructors.hpp"
#include "noethera/error.hpp"

namespace noethera {

namespace {

using i64 = std::int64_t;

i64 ck_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw BudgetError("integer overflow in quadratic-order arithmetic");
  return r;
}
i64 ck_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw BudgetError("integer overflow in quadratic-order arithmetic");
  return r;
}
i64 ck_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw BudgetError("integer overflow in quadratic-order arithmetic");
  return r;
}

i64 floor_mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

bool squarefree(i64 n) {
  n = n < 0 ? -n : n;
  for (i64 q = 2; q * q <= n; ++q)
    if (n % (q * q) == 0) return false;
  return true;
}

i64 isqrt(i64 n) {
  if (n < 0) return -1;
  auto r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<i64> roots_mod(const QuadraticOrder& order, std::uint64_t p) {
  std::vector<i64> roots;
  const auto sp = static_cast<i64>(p);
  for (i64 r = 0; r < sp; ++r) {
    const i64 v = floor_mod(ck_add(ck_sub(ck_mul(r, r), ck_mul(order.trace(), r)), order.norm_const()), sp);
    if (v == 0) roots.push_back(r);
  }
  return roots;
}

}  // namespace

QuadraticOrder QuadraticOrder::make(std::int64_t d, bool maximal) {
  if (d >= 0) throw InputError("quadratic order: d = " + std::to_string(d) + " is not negative (only imaginary orders)");
  if (!squarefree(d)) throw InputError("quadratic order: d = " + std::to_string(d) + " is not squarefree");
  const bool one_mod_four = floor_mod(d, 4) == 1;
  if (!maximal && !one_mod_four)
    throw InputError("quadratic order: Z[sqrt(" + std::to_string(d) + ")] is already maximal");
  QuadraticOrder o;
  o.d_ = d;
  if (one_mod_four && maximal) {
    o.trace_ = 1;
    o.norm_const_ = (1 - d) / 4;
  } else {
    o.trace_ = 0;
    o.norm_const_ = -d;
  }
  o.conductor_ = (one_mod_four && !maximal) ? 2 : 1;
  return o;
}

QuadraticOrder make_order(std::int64_t d, bool maximal) { return QuadraticOrder::make(d, maximal); }

QuadElement QuadraticOrder::mul(QuadElement a, QuadElement b) const {
  const i64 yy = ck_mul(a.y, b.y);
  return {ck_sub(ck_mul(a.x, b.x), ck_mul(norm_const_, yy)),
          ck_add(ck_add(ck_mul(a.x, b.y), ck_mul(a.y, b.x)), ck_mul(trace_, yy))};
}

QuadElement QuadraticOrder::conj(QuadElement a) const { return {ck_add(a.x, ck_mul(a.y, trace_)), -a.y}; }

std::int64_t QuadraticOrder::norm(QuadElement a) const {
  return ck_add(ck_add(ck_mul(a.x, a.x), ck_mul(trace_, ck_mul(a.x, a.y))), ck_mul(norm_const_, ck_mul(a.y, a.y)));
}

std::string QuadraticOrder::omega_text() const {
  return trace_ == 0 ? "sqrt(" + std::to_string(d_) + ")" : "w";
}

std::string QuadraticOrder::literal() const {
  if (trace_ == 0) return "Z[sqrt(" + std::to_string(d_) + ")]";
  return "O(" + std::to_string(d_) + ")";
}

std::string QuadraticOrder::format(QuadElement a) const {
  if (a.y == 0) return std::to_string(a.x);
  std::string out = a.x != 0 ? std::to_string(a.x) : "";
  if (a.y < 0)
    out += "-";
  else if (!out.empty())
    out += "+";
  const i64 mag = a.y < 0 ? -a.y : a.y;
  if (mag != 1) out += std::to_string(mag) + "*";
  return out + omega_text();
}

std::string format_ideal(const QuadraticOrder& order, const QOIdeal& ideal) {
  return "(" + std::to_string(ideal.a) + ", " + order.format({ideal.b, ideal.c}) + ")";
}

QOIdeal unit_ideal() { return {1, 0, 1}; }

QOIdeal ideal_from_generators(const QuadraticOrder& order, std::span<const QuadElement> gens) {
  std::vector<QuadElement> rows;
  for (const auto& g : gens) {
    rows.push_back(g);
    rows.push_back(order.mul(g, {0, 1}));
  }
  // Euclid on the omega-coordinate, then gcd of the remaining integers.
  std::optional<QuadElement> pivot;
  i64 a = 0;
  for (auto r : rows) {
    if (r.y != 0) {
      if (!pivot) {
        pivot = r;
        continue;
      }
      QuadElement p = *pivot;
      while (r.y != 0) {
        const i64 q = p.y / r.y;
        p = {ck_sub(p.x, ck_mul(q, r.x)), ck_sub(p.y, ck_mul(q, r.y))};
        std::swap(p, r);
      }
      pivot = p;
    }
    a = std::gcd(a, r.x < 0 ? -r.x : r.x);
    if (a != 0 && pivot) pivot->x = floor_mod(pivot->x, a);
  }
  if (!pivot || a == 0)
    throw InputError("ideal_from_generators: generators span no full-rank lattice (zero ideal is out of model)");
  QuadElement p = *pivot;
  if (p.y < 0) p = {-p.x, -p.y};
  return {a, floor_mod(p.x, a), p.y};
}

QOIdeal ideal_product(const QuadraticOrder& order, const QOIdeal& a, const QOIdeal& b) {
  std::vector<QuadElement> gens;
  for (auto u : a.basis())
    for (auto v : b.basis()) gens.push_back(order.mul(u, v));
  return ideal_from_generators(order, gens);
}

QOIdeal ideal_conjugate(const QuadraticOrder& order, const QOIdeal& a) {
  std::vector<QuadElement> gens;
  for (auto u : a.basis()) gens.push_back(order.conj(u));
  return ideal_from_generators(order, gens);
}

bool ideal_contains(const QOIdeal& ideal, QuadElement v) {
  if (v.y % ideal.c != 0) return false;
  const i64 k = v.y / ideal.c;
  return floor_mod(ck_sub(v.x, ck_mul(k, ideal.b)), ideal.a) == 0;
}

std::string to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::Split: return "split";
    case SplitKind::Inert: return "inert";
    case SplitKind::Ramified: return "ramified";
    case SplitKind::Singular: return "singular";
  }
  return "?";
}

PrimeSplitting factor_prime(const QuadraticOrder& order, std::uint64_t p, const DedekindOptions& opts) {
  if (!is_prime(p)) throw InputError("factor_prime: " + std::to_string(p) + " is not prime");
  if (p > opts.prime_table_bound)
    throw InputError("factor_prime: p = " + std::to_string(p) + " exceeds the prime table bound " +
                     std::to_string(opts.prime_table_bound));
  const auto sp = static_cast<i64>(p);
  const auto roots = roots_mod(order, p);
  auto prime_at = [&](i64 r) {
    const QuadElement gens[] = {{sp, 0}, {-r, 1}};
    return ideal_from_generators(order, gens);
  };
  PrimeSplitting out{p, SplitKind::Split, {}};
  if (order.conductor() % sp == 0) {
    out.kind = SplitKind::Singular;
    for (i64 r : roots) out.factors.push_back({prime_at(r), 0, 1});
    if (roots.empty()) out.factors.push_back({QOIdeal{sp, 0, sp}, 0, 2});
  } else if (roots.empty()) {
    out.kind = SplitKind::Inert;
    out.factors.push_back({QOIdeal{sp, 0, sp}, 1, 2});
  } else if (roots.size() == 1) {
    out.kind = SplitKind::Ramified;
    out.factors.push_back({prime_at(roots[0]), 2, 1});
  } else {
    out.kind = SplitKind::Split;
    for (i64 r : roots) out.factors.push_back({prime_at(r), 1, 1});
  }
  return out;
}

std::optional<QuadElement> is_principal(const QuadraticOrder& order, const QOIdeal& ideal, const DedekindOptions& opts) {
  // 4 N(x + y w) = (2x + t y)^2 + |D| y^2.
  const i64 n = ideal.norm();
  const i64 abs_disc = -order.discriminant();
  const i64 four_n = ck_mul(4, n);
  const i64 y_max = isqrt(four_n / abs_disc);
  if (y_max > opts.max_norm_search)
    throw BudgetError("is_principal: norm " + std::to_string(n) + " exceeds the search budget");
  for (i64 step = 0; step <= 2 * y_max; ++step) {
    const i64 y = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    const i64 rest = ck_sub(four_n, ck_mul(abs_disc, ck_mul(y, y)));
    if (rest < 0) continue;
    const i64 s = isqrt(rest);
    if (s * s != rest) continue;
    for (i64 sign : {1, -1}) {
      const i64 twice_x = ck_sub(sign * s, ck_mul(order.trace(), y));
      if (twice_x % 2 != 0) continue;
      const QuadElement v{twice_x / 2, y};
      if (ideal_contains(ideal, v)) return v;
      if (s == 0) break;
    }
  }
  return std::nullopt;
}

bool is_prime_ideal(const QuadraticOrder& order, const QOIdeal& ideal) {
  if (ideal.c == 1) return ideal.a > 1 && is_prime(static_cast<std::uint64_t>(ideal.a));
  return ideal.a == ideal.c && ideal.b == 0 && is_prime(static_cast<std::uint64_t>(ideal.a)) &&
         roots_mod(order, static_cast<std::uint64_t>(ideal.a)).empty();
}

std::size_t local_mu(const QuadraticOrder& order, const QOIdeal& ideal, const QOIdeal& prime) {
  if (!is_prime_ideal(order, prime))
    throw InputError("local_mu: " + format_ideal(order, prime) + " is not a prime ideal");
  const QOIdeal product = ideal_product(order, prime, ideal);
  i64 ratio = product.norm() / ideal.norm();
  if (product.norm() % ideal.norm() != 0) throw InvariantError("local_mu: mI is not contained in I");
  const i64 q = prime.norm();
  std::size_t dim = 0;
  while (ratio > 1) {
    if (ratio % q != 0) throw InvariantError("local_mu: |I/mI| is not a power of |O/m|");
    ratio /= q;
    ++dim;
  }
  return dim;
}

ClassGroupReport class_number(const QuadraticOrder& order, const DedekindOptions& opts) {
  const i64 disc = order.discriminant();
  if (-disc > opts.max_abs_discriminant)
    throw BudgetError("class_number: |disc| = " + std::to_string(-disc) + " exceeds the bound " +
                      std::to_string(opts.max_abs_discriminant));
  ClassGroupReport rep{order, 0, {}, {}, {}, true};
  for (i64 a = 1; 3 * a * a <= -disc; ++a)
    for (i64 b = -a + 1; b <= a; ++b) {
      if (floor_mod(b - disc, 2) != 0) continue;
      const i64 num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      rep.forms.push_back({a, b, c});
    }
  rep.class_number = rep.forms.size();
  // (a, b, c) <-> a Z + ((-b + sqrt(D))/2) Z.
  for (const auto& f : rep.forms) {
    const i64 shift = order.trace() == 0 ? -f.b / 2 : (-f.b - 1) / 2;
    const QuadElement gens[] = {{f.a, 0}, {shift, 1}};
    const QOIdeal ideal = ideal_from_generators(order, gens);
    if (ideal.norm() != f.a) throw InvariantError("class_number: form ideal has the wrong norm");
    rep.representatives.push_back(ideal);
    rep.principal_generators.push_back(is_principal(order, ideal, opts));
  }
  for (std::size_t i = 0; i < rep.representatives.size(); ++i)
    for (std::size_t j = i + 1; j < rep.representatives.size(); ++j) {
      const QOIdeal q = ideal_product(order, rep.representatives[i], ideal_conjugate(order, rep.representatives[j]));
      if (is_principal(order, q, opts)) rep.pairwise_inequivalent = false;
    }
  if (!rep.pairwise_inequivalent) throw InvariantError("class_number: two reduced forms give equivalent ideals");
  return rep;
}

OrderRankReport order_rank_report(const QuadraticOrder& order, const DedekindOptions& opts) {
  OrderRankReport r;
  r.order = order;
  r.class_group = class_number(order, opts);

  std::vector<QOIdeal> primes;
  for (std::uint64_t p = 2; p <= std::min(opts.sample_prime_bound, opts.prime_table_bound); ++p) {
    if (!is_prime(p)) continue;
    auto split = factor_prime(order, p, opts);
    if (split.kind == SplitKind::Singular) r.singular_primes.push_back(p);
    for (const auto& f : split.factors) primes.push_back(f.ideal);
    r.sampled_primes.push_back(std::move(split));
  }
  std::vector<QOIdeal> tests{unit_ideal()};
  for (const auto& p : primes) {
    tests.push_back(p);
    tests.push_back(ideal_product(order, p, p));
  }
  for (const auto& rep : r.class_group.representatives) tests.push_back(rep);

  r.lrk = 0;
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const auto& m = primes[pi];
    const bool singular = order.conductor() > 1 && order.conductor() % m.a == 0;
    for (const auto& ideal : tests) {
      const std::size_t mu = local_mu(order, ideal, m);
      if (!singular && mu > 1) r.dvr_at_sampled_primes = false;
      if (mu > r.lrk) {
        r.lrk = mu;
        r.lrk_witness_prime = m;
        r.lrk_witness_ideal = ideal;
        r.lrk_witness_mu = mu;
      }
    }
  }

  if (order.maximal()) {
    if (r.class_group.class_number > 1) {
      r.rk = 2;
      const std::size_t idx = static_cast<std::size_t>(
          std::find_if(r.class_group.principal_generators.begin(), r.class_group.principal_generators.end(),
                       [](const auto& g) { return !g.has_value(); }) -
          r.class_group.principal_generators.begin());
      r.rk_witness = r.class_group.representatives.at(idx);
      r.rk_witness_generators = r.rk_witness.basis();
      r.rk_reason = "class number " + std::to_string(r.class_group.class_number) +
                    " > 1: witness ideal is not principal and is generated by its two HNF basis elements";
    } else {
      r.rk = 1;
      r.rk_witness = unit_ideal();
      r.rk_witness_generators = {{1, 0}};
      r.rk_reason = "class number 1: every ideal is principal";
    }
  } else {
    r.rk = 2;
    r.rk_witness = r.lrk_witness_prime;
    r.rk_witness_generators = r.rk_witness.basis();
    r.rk_reason = "every ideal is a rank-2 lattice, hence 2-generated; local mu " + std::to_string(r.lrk_witness_mu) +
                  " at a conductor prime forces 2";
  }
  if (r.lrk > 2 || r.lrk > r.rk) throw InvariantError("order_rank_report: local rank exceeds the lattice bound");
  r.of_local_rank = r.rk == r.lrk;
  return r;
}

}  // namespace noethera
