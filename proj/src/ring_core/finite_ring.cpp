#include "noethera/finite_ring.hpp"

#include <random>
#include <sstream>

#include "noethera/error.hpp"

namespace noethera {

namespace {

std::uint64_t hash_tables(std::size_t n, const std::vector<Elem>& add, const std::vector<Elem>& mul,
                          Elem zero, Elem one) {
  std::uint64_t h = 0x243f6a8885a308d3ull ^ (n * 0x9e3779b97f4a7c15ull);
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
  };
  mix(zero);
  mix(one);
  for (std::size_t i = 0; i < add.size(); i += 2)
    mix((std::uint64_t{add[i]} << 32) | (i + 1 < add.size() ? add[i + 1] : 0u));
  mix(0xabcdefull);
  for (std::size_t i = 0; i < mul.size(); i += 2)
    mix((std::uint64_t{mul[i]} << 32) | (i + 1 < mul.size() ? mul[i + 1] : 0u));
  return h;
}

std::string name_of(const std::vector<std::string>& labels, Elem e) {
  return e < labels.size() ? labels[e] : std::to_string(e);
}

std::string triple(const std::vector<std::string>& labels, Elem a, Elem b, Elem c) {
  return "(" + name_of(labels, a) + ", " + name_of(labels, b) + ", " + name_of(labels, c) + ")";
}

}  // namespace

void validate_ring_axioms(std::size_t n, const std::vector<Elem>& add, const std::vector<Elem>& mul,
                          Elem zero, Elem one, const std::vector<std::string>& labels,
                          const BuildOptions& opts, bool check_triples) {
  if (n == 0) throw InputError("a ring needs at least one element");
  if (add.size() != n * n || mul.size() != n * n)
    throw InputError("operation tables must have " + std::to_string(n * n) + " entries");
  if (zero >= n || one >= n) throw InputError("zero/one index out of range");
  for (std::size_t i = 0; i < n * n; ++i)
    if (add[i] >= n || mul[i] >= n) throw InputError("table entry out of range");

  auto A = [&](Elem a, Elem b) { return add[static_cast<std::size_t>(a) * n + b]; };
  auto M = [&](Elem a, Elem b) { return mul[static_cast<std::size_t>(a) * n + b]; };
  const auto nn = static_cast<Elem>(n);

  for (Elem a = 0; a < nn; ++a) {
    if (A(zero, a) != a) throw InputError("zero is not an additive identity at " + name_of(labels, a));
    if (M(one, a) != a)
      throw InputError("one is not a multiplicative identity at " + name_of(labels, a));
    bool has_inverse = false;
    for (Elem b = 0; b < nn; ++b) {
      if (A(a, b) != A(b, a))
        throw InputError("addition is not commutative at (" + name_of(labels, a) + ", " +
                         name_of(labels, b) + ")");
      if (M(a, b) != M(b, a))
        throw InputError("multiplication is not commutative at (" + name_of(labels, a) + ", " +
                         name_of(labels, b) + ")");
      if (A(a, b) == zero) has_inverse = true;
    }
    if (!has_inverse) throw InputError("no additive inverse for " + name_of(labels, a));
  }

  auto check = [&](Elem a, Elem b, Elem c) {
    if (A(A(a, b), c) != A(a, A(b, c)))
      throw InputError("associativity of addition fails at " + triple(labels, a, b, c));
    if (M(M(a, b), c) != M(a, M(b, c)))
      throw InputError("associativity of multiplication fails at " + triple(labels, a, b, c));
    if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
      throw InputError("distributivity fails at " + triple(labels, a, b, c));
  };

  if (opts.exhaustive_validate || (check_triples && n <= opts.exhaustive_threshold)) {
    for (Elem a = 0; a < nn; ++a)
      for (Elem b = 0; b < nn; ++b)
        for (Elem c = 0; c < nn; ++c) check(a, b, c);
    return;
  }
  if (!check_triples) return;
  // Fixed seed keeps validation (and thus every report) reproducible.
  std::mt19937_64 rng(0x5eed0000ull ^ n);
  std::uniform_int_distribution<Elem> pick(0, nn - 1);
  for (std::size_t t = 0; t < opts.sampled_triples; ++t) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    check(a, b, c);
  }
}

FiniteRing FiniteRing::from_tables(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul,
                                   Elem zero, Elem one, Presentation presentation,
                                   std::vector<std::string> labels, const BuildOptions& opts,
                                   TableSource source) {
  if (n > opts.max_size)
    throw BudgetError("ring of size " + std::to_string(n) + " exceeds the size cap " +
                      std::to_string(opts.max_size));
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("#" + std::to_string(i));
  }
  if (labels.size() != n) throw InputError("label count does not match ring size");
  validate_ring_axioms(n, add, mul, zero, one, labels, opts, source == TableSource::Untrusted);

  FiniteRing r;
  r.n_ = n;
  r.zero_ = zero;
  r.one_ = one;
  r.neg_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (add[a * n + b] == zero) {
        r.neg_[a] = static_cast<Elem>(b);
        break;
      }
  r.content_hash_ = hash_tables(n, add, mul, zero, one);
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.presentation_ = std::move(presentation);
  r.labels_ = std::move(labels);
  return r;
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one_, base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteRing::is_unit(Elem a) const {
  for (Elem x : mul_row(a))
    if (x == one_) return true;
  return false;
}

std::uint64_t FiniteRing::additive_order(Elem a) const {
  std::uint64_t k = 1;
  for (Elem x = a; x != zero_; x = add(x, a)) ++k;
  return k;
}

std::uint64_t FiniteRing::presentation_hash() const {
  std::ostringstream os;
  os << presentation_.text() << ":" << n_ << ":" << std::hex << content_hash_;
  return fnv1a64(os.str());
}

}  // namespace noethera
