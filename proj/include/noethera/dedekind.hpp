#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace noethera {

/// x + y*omega.
struct QuadElement {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const QuadElement&, const QuadElement&) = default;
};

/// An imaginary quadratic order: the maximal order of Q(sqrt(d)), or the
/// order Z[sqrt(d)] of conductor 2 when d = 1 mod 4. omega satisfies
/// omega^2 = trace*omega - norm_const.
class QuadraticOrder {
 public:
  /// d < 0 squarefree. `maximal = false` is only meaningful for d = 1 mod 4.
  static QuadraticOrder make(std::int64_t d, bool maximal);

  std::int64_t d() const { return d_; }
  bool maximal() const { return conductor_ == 1; }
  std::int64_t trace() const { return trace_; }
  std::int64_t norm_const() const { return norm_const_; }
  std::int64_t discriminant() const { return trace_ * trace_ - 4 * norm_const_; }
  std::int64_t conductor() const { return conductor_; }

  QuadElement mul(QuadElement a, QuadElement b) const;
  QuadElement conj(QuadElement a) const;
  std::int64_t norm(QuadElement a) const;
  /// "1+sqrt(-5)"; for half-integral omega the symbol is "w" = (1+sqrt(d))/2.
  std::string format(QuadElement a) const;
  std::string omega_text() const;
  /// Canonical DSL literal: "Z[sqrt(d)]" when that ring is this order, else "O(d)".
  std::string literal() const;

  friend bool operator==(const QuadraticOrder&, const QuadraticOrder&) = default;

 private:
  std::int64_t d_ = -1;
  std::int64_t trace_ = 0;
  std::int64_t norm_const_ = 1;
  std::int64_t conductor_ = 1;
};

QuadraticOrder make_order(std::int64_t d, bool maximal);

/// Ideal a Z + (b + c omega) Z in Hermite normal form: a, c > 0,
/// 0 <= b < a, c | a, c | b. Norm (index in the order) is a*c.
struct QOIdeal {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;

  std::int64_t norm() const { return a * c; }
  /// Z-basis {a, b + c omega}, also an ideal generating pair.
  std::vector<QuadElement> basis() const { return {{a, 0}, {b, c}}; }
  friend bool operator==(const QOIdeal&, const QOIdeal&) = default;
};

std::string format_ideal(const QuadraticOrder& order, const QOIdeal& ideal);

/// HNF of the Z-span of gens and omega*gens. Zero ideal rejected.
QOIdeal ideal_from_generators(const QuadraticOrder& order, std::span<const QuadElement> gens);
QOIdeal ideal_product(const QuadraticOrder& order, const QOIdeal& a, const QOIdeal& b);
QOIdeal ideal_conjugate(const QuadraticOrder& order, const QOIdeal& a);
bool ideal_contains(const QOIdeal& ideal, QuadElement v);
QOIdeal unit_ideal();

struct DedekindOptions {
  std::int64_t max_abs_discriminant = 10000;
  std::uint64_t prime_table_bound = 997;
  std::uint64_t sample_prime_bound = 50;
  /// Cap on the number of y values scanned in a principality search.
  std::int64_t max_norm_search = 10000000;
};

enum class SplitKind { Split, Inert, Ramified, Singular };
std::string to_string(SplitKind kind);

struct PrimeFactor {
  QOIdeal ideal;
  /// Exponent in (p); 0 for singular primes, where (p) is not a product of primes.
  unsigned exponent = 1;
  unsigned residue_degree = 1;
};

struct PrimeSplitting {
  std::uint64_t p = 0;
  SplitKind kind = SplitKind::Split;
  std::vector<PrimeFactor> factors;
};

/// Splitting of (p) decided by roots of the minimal polynomial of omega
/// mod p. Primes dividing the conductor are reported as Singular.
PrimeSplitting factor_prime(const QuadraticOrder& order, std::uint64_t p, const DedekindOptions& opts = {});

/// A generator x + y omega with |N| = N(I) lying in I, if one exists. The
/// search is complete because the norm form is positive definite.
std::optional<QuadElement> is_principal(const QuadraticOrder& order, const QOIdeal& ideal,
                                        const DedekindOptions& opts = {});

bool is_prime_ideal(const QuadraticOrder& order, const QOIdeal& ideal);

/// dim over O/m of I/mI, from lattice indices.
std::size_t local_mu(const QuadraticOrder& order, const QOIdeal& ideal, const QOIdeal& prime);

struct ReducedForm {
  std::int64_t a, b, c;
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

struct ClassGroupReport {
  QuadraticOrder order;
  std::size_t class_number = 1;
  std::vector<ReducedForm> forms;
  std::vector<QOIdeal> representatives;
  /// Generator for each principal representative, nullopt otherwise.
  std::vector<std::optional<QuadElement>> principal_generators;
  /// Every pair I_i * conj(I_j), i < j, was checked non-principal.
  bool pairwise_inequivalent = true;
};

/// Counts reduced primitive positive-definite forms of the discriminant.
ClassGroupReport class_number(const QuadraticOrder& order, const DedekindOptions& opts = {});

struct OrderRankReport {
  QuadraticOrder order;
  ClassGroupReport class_group;
  std::size_t rk = 0;
  std::size_t lrk = 0;
  bool of_local_rank = true;
  QOIdeal rk_witness;
  std::vector<QuadElement> rk_witness_generators;
  std::string rk_reason;
  QOIdeal lrk_witness_prime;
  QOIdeal lrk_witness_ideal;
  std::size_t lrk_witness_mu = 0;
  std::vector<PrimeSplitting> sampled_primes;
  std::vector<std::uint64_t> singular_primes;
  /// Every sampled localization at a non-singular prime had local mu <= 1.
  bool dvr_at_sampled_primes = true;
};

OrderRankReport order_rank_report(const QuadraticOrder& order, const DedekindOptions& opts = {});

}  // namespace noethera
