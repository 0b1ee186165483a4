#pragma once

// Independent reference computations for the tests. None of these call the
// library algorithms they check; they only read operation tables.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "noethera/constructors.hpp"
#include "noethera/dedekind.hpp"
#include "noethera/finite_ring.hpp"

namespace oracle {

using noethera::Elem;
using noethera::FiniteRing;
using Set = std::vector<bool>;

inline std::vector<Elem> members(const Set& s) {
  std::vector<Elem> out;
  for (Elem i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

inline std::vector<Elem> members(const noethera::IdealSet& i) { return i.elements(); }

/// Naive fixpoint: repeatedly add sums and ring multiples until nothing changes.
inline Set closure(const FiniteRing& r, const std::vector<Elem>& gens) {
  const auto n = static_cast<Elem>(r.size());
  Set s(n, false);
  s[r.zero()] = true;
  for (Elem g : gens) s[g] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a = 0; a < n; ++a) {
      if (!s[a]) continue;
      for (Elem b = 0; b < n; ++b) {
        const Elem m = r.mul(a, b);
        if (!s[m]) s[m] = changed = true;
        if (s[b]) {
          const Elem t = r.add(a, b);
          if (!s[t]) s[t] = changed = true;
        }
      }
    }
  }
  return s;
}

inline bool is_ideal(const FiniteRing& r, const Set& s) {
  if (!s[r.zero()]) return false;
  for (Elem a = 0; a < r.size(); ++a) {
    if (!s[a]) continue;
    for (Elem b = 0; b < r.size(); ++b) {
      if (!s[r.mul(a, b)]) return false;
      if (s[b] && !s[r.add(a, b)]) return false;
    }
  }
  return true;
}

/// Every additive subgroup, by closing {0} under adjoining single elements.
inline std::set<std::vector<Elem>> additive_subgroups(const FiniteRing& r) {
  auto close_add = [&](Set s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Elem a = 0; a < r.size(); ++a)
        if (s[a])
          for (Elem b = 0; b < r.size(); ++b)
            if (s[b] && !s[r.add(a, b)]) s[r.add(a, b)] = changed = true;
    }
    return s;
  };
  std::set<std::vector<Elem>> seen;
  std::vector<Set> frontier;
  Set zero(r.size(), false);
  zero[r.zero()] = true;
  frontier.push_back(zero);
  seen.insert(members(zero));
  while (!frontier.empty()) {
    Set s = frontier.back();
    frontier.pop_back();
    for (Elem x = 0; x < r.size(); ++x) {
      if (s[x]) continue;
      Set t = s;
      t[x] = true;
      t = close_add(t);
      if (seen.insert(members(t)).second) frontier.push_back(t);
    }
  }
  return seen;
}

/// All ideals as sorted member lists, by filtering additive subgroups.
inline std::set<std::vector<Elem>> ideals_by_filter(const FiniteRing& r) {
  std::set<std::vector<Elem>> out;
  for (const auto& g : additive_subgroups(r)) {
    Set s(r.size(), false);
    for (Elem e : g) s[e] = true;
    if (is_ideal(r, s)) out.insert(g);
  }
  return out;
}

inline std::vector<Elem> idempotents(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem e = 0; e < r.size(); ++e)
    if (r.mul(e, e) == e) out.push_back(e);
  return out;
}

/// Non-zero idempotents that are not a sum of two orthogonal non-zero idempotents.
inline std::vector<Elem> primitive_idempotents(const FiniteRing& r) {
  const auto all = idempotents(r);
  std::vector<Elem> out;
  for (Elem e : all) {
    if (e == r.zero()) continue;
    bool split = false;
    for (Elem f : all)
      if (f != r.zero() && f != e && r.mul(e, f) == f) split = true;  // f < e
    if (!split) out.push_back(e);
  }
  return out;
}

inline std::size_t units(const FiniteRing& r) {
  std::size_t c = 0;
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b)
      if (r.mul(a, b) == r.one()) {
        ++c;
        break;
      }
  return c;
}

/// Maximal ideals: proper ideals not strictly contained in another proper ideal.
inline std::vector<std::vector<Elem>> maximal_ideals(const FiniteRing& r) {
  const auto all = ideals_by_filter(r);
  std::vector<std::vector<Elem>> out;
  for (const auto& i : all) {
    if (i.size() == r.size()) continue;
    bool maximal = true;
    for (const auto& j : all)
      if (j.size() > i.size() && j.size() < r.size() && std::includes(j.begin(), j.end(), i.begin(), i.end()))
        maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

/// Kernel of R -> R_m: elements killed by some s outside m.
inline Set localization_kernel(const FiniteRing& r, const std::vector<Elem>& m) {
  Set in_m(r.size(), false);
  for (Elem e : m) in_m[e] = true;
  Set ker(r.size(), false);
  for (Elem x = 0; x < r.size(); ++x)
    for (Elem s = 0; s < r.size(); ++s)
      if (!in_m[s] && r.mul(s, x) == r.zero()) {
        ker[x] = true;
        break;
      }
  return ker;
}

/// Smallest k with some k-subset of `ideal` generating it, by plain subset search.
inline std::size_t mu_naive(const FiniteRing& r, const std::vector<Elem>& ideal) {
  if (ideal.size() == 1) return 0;
  const std::size_t n = ideal.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Elem> gens;
      for (auto i : idx) gens.push_back(ideal[i]);
      if (members(closure(r, gens)) == ideal) return k;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return n;
}

// ---- integers and quadratic orders

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod(b, m);
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

/// Splitting of an odd prime p in the maximal order of Q(sqrt(d)) via Euler's
/// criterion on the field discriminant: 1 split, -1 inert, 0 ramified.
inline int kronecker_odd(std::int64_t disc, std::int64_t p) {
  const std::int64_t a = mod(disc, p);
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Index of the Z-span of `vecs` in Z^2: gcd of all 2x2 minors.
inline std::int64_t lattice_index(const std::vector<noethera::QuadElement>& vecs) {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = i + 1; j < vecs.size(); ++j) {
      const std::int64_t det = vecs[i].x * vecs[j].y - vecs[i].y * vecs[j].x;
      g = std::gcd(g, det < 0 ? -det : det);
    }
  return g;
}

/// Number of ideal classes, by grouping all ideals of norm up to the
/// Minkowski-type bound sqrt(|D|/3) under I ~ J iff I * conj(J) is principal.
inline std::size_t class_count_by_ideals(const noethera::QuadraticOrder& o) {
  using namespace noethera;
  const std::int64_t abs_d = -o.discriminant();
  std::int64_t bound = 1;
  while ((bound + 1) * (bound + 1) * 3 <= abs_d) ++bound;
  std::vector<QOIdeal> ideals;
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t c = 1; c <= a; ++c) {
      if (a % c || (a * c) > bound) continue;
      for (std::int64_t b = 0; b < a; b += c) {
        const QOIdeal cand{a, b, c};
        // Ideal iff omega * basis stays inside the lattice.
        bool closed = true;
        for (auto v : cand.basis())
          if (!ideal_contains(cand, o.mul(v, {0, 1}))) closed = false;
        if (closed) ideals.push_back(cand);
      }
    }
  std::vector<QOIdeal> reps;
  for (const auto& i : ideals) {
    bool found = false;
    for (const auto& r : reps)
      if (is_principal(o, ideal_product(o, i, ideal_conjugate(o, r)))) found = true;
    if (!found) reps.push_back(i);
  }
  return reps.size();
}

}  // namespace oracle
