#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "noethera/element_set.hpp"
#include "noethera/presentation.hpp"

namespace noethera {

struct BuildOptions {
  /// Hard cap on ring size; larger constructions throw BudgetError.
  std::size_t max_size = 4096;
  /// Check every triple for associativity/distributivity regardless of size.
  bool exhaustive_validate = false;
  /// Rings up to this size are always checked exhaustively.
  std::size_t exhaustive_threshold = 64;
  std::size_t sampled_triples = 100000;
};

/// Where operation tables come from. Derived tables (Z/n, products,
/// quotients, relabellings of validated rings) skip the triple checks unless
/// `BuildOptions::exhaustive_validate` is set; pair checks always run.
enum class TableSource { Untrusted, Derived };

/// A finite commutative ring with identity given by full operation tables.
/// Immutable once built; every constructor path goes through `from_tables`,
/// which validates the ring axioms.
class FiniteRing {
 public:
  static FiniteRing from_tables(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul,
                                Elem zero, Elem one, Presentation presentation,
                                std::vector<std::string> labels, const BuildOptions& opts = {},
                                TableSource source = TableSource::Untrusted);

  std::size_t size() const { return n_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  bool is_zero_ring() const { return n_ == 1; }

  Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  std::span<const Elem> add_row(Elem a) const {
    return {add_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  std::span<const Elem> mul_row(Elem a) const {
    return {mul_.data() + static_cast<std::size_t>(a) * n_, n_};
  }

  bool is_unit(Elem a) const;
  /// Additive order of `a`.
  std::uint64_t additive_order(Elem a) const;
  /// Smallest k>0 with k*1 = 0.
  std::uint64_t characteristic() const { return additive_order(one_); }

  const Presentation& presentation() const { return presentation_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Hash of the operation tables; identifies the ambient ring of an ideal.
  std::uint64_t content_hash() const { return content_hash_; }
  /// Hash of presentation text and tables; keys lattice cache files.
  std::uint64_t presentation_hash() const;

  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }

  /// Same tables (labels and presentations may differ).
  bool same_tables(const FiniteRing& other) const {
    return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
           mul_ == other.mul_;
  }

 private:
  FiniteRing() = default;

  std::size_t n_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  Presentation presentation_;
  std::vector<std::string> labels_;
  std::uint64_t content_hash_ = 0;
};

/// Checks commutativity, identities and inverses on all pairs, and
/// associativity/distributivity on all triples (n <= threshold or when
/// forced) or on `sampled_triples` uniformly drawn triples. Throws InputError
/// naming the first offending pair or triple.
void validate_ring_axioms(std::size_t n, const std::vector<Elem>& add,
                          const std::vector<Elem>& mul, Elem zero, Elem one,
                          const std::vector<std::string>& labels, const BuildOptions& opts,
                          bool check_triples = true);

}  // namespace noethera
