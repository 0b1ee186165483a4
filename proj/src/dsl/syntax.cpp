#include <cctype>
#include <limits>

#include "noethera/dsl.hpp"
#include "noethera/polynomial_text.hpp"

namespace noethera::dsl {

bool operator==(const TupleLiteral& a, const TupleLiteral& b) { return a.parts == b.parts; }
bool operator==(const ProductExpr& a, const ProductExpr& b) { return a.children == b.children; }
bool operator==(const QuotientExpr& a, const QuotientExpr& b) {
  return *a.child == *b.child && a.generators == b.generators;
}
bool operator==(const PolyExpr& a, const PolyExpr& b) { return *a.child == *b.child; }

SyntaxError::SyntaxError(const std::string& message, std::size_t line, std::size_t column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingExpr expression() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string word = identifier();
    if (word == "Z") {
      skip_ws();
      if (accept('/')) return {ZModExpr{unsigned_int()}};
      expect('[');
      keyword("sqrt");
      expect('(');
      const std::int64_t d = signed_int();
      expect(')');
      expect(']');
      const bool one_mod_four = ((d % 4) + 4) % 4 == 1;
      return {QuadExpr{d, !one_mod_four}};
    }
    if (word == "O") {
      expect('(');
      const std::int64_t d = signed_int();
      expect(')');
      return {QuadExpr{d, true}};
    }
    if (word == "GF") {
      expect('(');
      const std::uint64_t p = unsigned_int();
      expect(',');
      auto f = polynomial();
      expect(')');
      return {GFExpr{p, std::move(f)}};
    }
    if (word == "algebra") {
      expect('(');
      return {AlgebraExpr{path()}};
    }
    if (word == "product") {
      expect('(');
      ProductExpr prod;
      prod.children.push_back(expression());
      while (accept(',')) prod.children.push_back(expression());
      expect(')');
      return {std::move(prod)};
    }
    if (word == "quot") {
      expect('(');
      auto child = std::make_shared<const RingExpr>(expression());
      expect(';');
      QuotientExpr q{std::move(child), element_list()};
      expect(')');
      return {std::move(q)};
    }
    if (word == "poly") {
      expect('(');
      auto child = std::make_shared<const RingExpr>(expression());
      expect(')');
      return {PolyExpr{std::move(child)}};
    }
    pos_ = start;
    fail(word.empty() ? "expected a ring expression" : "unknown ring constructor '" + word + "'");
  }

  std::vector<ElemLiteral> element_list() {
    std::vector<ElemLiteral> out{element()};
    while (accept(',')) out.push_back(element());
    return out;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(message, line, column);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip_ws();
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    return out;
  }
  void keyword(std::string_view kw) {
    const std::size_t start = pos_;
    if (identifier() != kw) {
      pos_ = start;
      skip_ws();
      fail("expected '" + std::string(kw) + "'");
    }
  }

  std::uint64_t unsigned_int() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  std::int64_t signed_int() {
    const bool negative = accept('-');
    if (!negative) accept('+');
    const std::size_t start = pos_;
    const std::uint64_t mag = unsigned_int();
    const std::uint64_t limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + (negative ? 1 : 0);
    if (mag > limit) {
      pos_ = start;
      fail("integer too large");
    }
    if (negative) return mag == limit ? std::numeric_limits<std::int64_t>::min() : -static_cast<std::int64_t>(mag);
    return static_cast<std::int64_t>(mag);
  }

  static std::int64_t add_checked(std::int64_t a, std::int64_t b, Parser& self) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) self.fail("coefficient too large");
    return r;
  }

  /// Integer polynomial in x; like terms are combined.
  PolyLiteral polynomial() {
    std::vector<std::int64_t> coeffs;
    bool first = true;
    while (true) {
      bool negative = false;
      const char c = peek();
      if (c == '-' || c == '+') {
        negative = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      std::uint64_t mag = 1;
      bool have_coeff = false;
      skip_ws();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        mag = unsigned_int();
        have_coeff = true;
      }
      std::size_t degree = 0;
      if (have_coeff) accept('*');
      if (peek() == 'x') {
        ++pos_;
        degree = 1;
        if (accept('^')) {
          const std::uint64_t e = unsigned_int();
          if (e > 64) fail("exponent too large");
          degree = static_cast<std::size_t>(e);
        }
      } else if (!have_coeff) {
        fail("expected a polynomial term");
      }
      const std::uint64_t limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
      if (mag > limit) fail("coefficient too large");
      const auto term = negative ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
      if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
      coeffs[degree] = add_checked(coeffs[degree], term, *this);
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return {std::move(coeffs)};
  }

  ElemLiteral element() {
    if (accept('[')) {
      VectorLiteral v;
      v.coords.push_back(signed_int());
      while (accept(',')) v.coords.push_back(signed_int());
      expect(']');
      return {std::move(v)};
    }
    if (accept('(')) {
      TupleLiteral t;
      t.parts.push_back(element());
      while (accept(',')) t.parts.push_back(element());
      expect(')');
      return {std::move(t)};
    }
    return {polynomial()};
  }

  std::string path() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ')' && text_[pos_] != '\n') ++pos_;
    std::string_view raw = text_.substr(start, pos_ - start);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
    if (raw.empty()) {
      pos_ = start;
      fail("expected a file path");
    }
    expect(')');
    return std::string(raw);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingExpr parse(std::string_view text) {
  Parser p(text);
  auto e = p.expression();
  p.finish();
  return e;
}

std::vector<ElemLiteral> parse_elements(std::string_view text) {
  Parser p(text);
  auto out = p.element_list();
  p.finish();
  return out;
}

std::string print(const ElemLiteral& literal) {
  if (auto* p = std::get_if<PolyLiteral>(&literal.value)) return format_polynomial(p->coeffs);
  if (auto* v = std::get_if<VectorLiteral>(&literal.value)) {
    std::string out = "[";
    for (std::size_t i = 0; i < v->coords.size(); ++i) out += (i ? "," : "") + std::to_string(v->coords[i]);
    return out + "]";
  }
  const auto& t = std::get<TupleLiteral>(literal.value);
  std::string out = "(";
  for (std::size_t i = 0; i < t.parts.size(); ++i) out += (i ? ", " : "") + print(t.parts[i]);
  return out + ")";
}

namespace {

struct Printer {
  std::string operator()(const ZModExpr& z) const { return "Z/" + std::to_string(z.n); }
  std::string operator()(const GFExpr& g) const {
    return "GF(" + std::to_string(g.p) + ", " + format_polynomial(g.f.coeffs) + ")";
  }
  std::string operator()(const AlgebraExpr& a) const { return "algebra(" + a.path + ")"; }
  std::string operator()(const QuadExpr& q) const {
    const bool one_mod_four = ((q.d % 4) + 4) % 4 == 1;
    if (q.maximal && one_mod_four) return "O(" + std::to_string(q.d) + ")";
    return "Z[sqrt(" + std::to_string(q.d) + ")]";
  }
  std::string operator()(const ProductExpr& p) const {
    std::string out = "product(";
    for (std::size_t i = 0; i < p.children.size(); ++i) out += (i ? ", " : "") + print(p.children[i]);
    return out + ")";
  }
  std::string operator()(const QuotientExpr& q) const {
    std::string out = "quot(" + print(*q.child) + "; ";
    for (std::size_t i = 0; i < q.generators.size(); ++i) out += (i ? ", " : "") + print(q.generators[i]);
    return out + ")";
  }
  std::string operator()(const PolyExpr& p) const { return "poly(" + print(*p.child) + ")"; }
};

std::int64_t small_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

PolyLiteral random_poly(std::mt19937_64& rng, bool monic) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(small_int(rng, monic ? 2 : 0, 4)));
  for (auto& x : c) x = small_int(rng, -9, 9);
  if (monic) c.back() = 1;
  while (!c.empty() && c.back() == 0) c.pop_back();
  return {std::move(c)};
}

ElemLiteral random_literal(std::mt19937_64& rng, unsigned depth) {
  switch (small_int(rng, 0, depth > 0 ? 2 : 1)) {
    case 0: return {random_poly(rng, false)};
    case 1: {
      VectorLiteral v;
      v.coords.resize(static_cast<std::size_t>(small_int(rng, 1, 4)));
      for (auto& x : v.coords) x = small_int(rng, -3, 9);
      return {std::move(v)};
    }
    default: {
      TupleLiteral t;
      const auto n = small_int(rng, 1, 3);
      for (std::int64_t i = 0; i < n; ++i) t.parts.push_back(random_literal(rng, depth - 1));
      return {std::move(t)};
    }
  }
}

}  // namespace

std::string print(const RingExpr& expr) { return std::visit(Printer{}, expr.node); }

RingExpr random_expr(std::mt19937_64& rng, unsigned max_depth) {
  static const char* const paths[] = {"trunc_n3.sc", "algebras/local_8.sc", "a.sc", "dir/sub dir/x.sc"};
  const auto kind = small_int(rng, 0, max_depth > 0 ? 6 : 3);
  switch (kind) {
    case 0: return {ZModExpr{static_cast<std::uint64_t>(small_int(rng, 0, 5000))}};
    case 1: return {GFExpr{static_cast<std::uint64_t>(small_int(rng, 0, 50)), random_poly(rng, true)}};
    case 2: return {AlgebraExpr{paths[small_int(rng, 0, 3)]}};
    case 3: {
      const std::int64_t d = small_int(rng, -500, 50);
      const bool one_mod_four = ((d % 4) + 4) % 4 == 1;
      return {QuadExpr{d, one_mod_four ? small_int(rng, 0, 1) == 1 : true}};
    }
    case 4: {
      ProductExpr p;
      const auto n = small_int(rng, 1, 3);
      for (std::int64_t i = 0; i < n; ++i) p.children.push_back(random_expr(rng, max_depth - 1));
      return {std::move(p)};
    }
    case 5: {
      QuotientExpr q{std::make_shared<const RingExpr>(random_expr(rng, max_depth - 1)), {}};
      const auto n = small_int(rng, 1, 3);
      for (std::int64_t i = 0; i < n; ++i) q.generators.push_back(random_literal(rng, 2));
      return {std::move(q)};
    }
    default: return {PolyExpr{std::make_shared<const RingExpr>(random_expr(rng, max_depth - 1))}};
  }
}

}  // namespace noethera::dsl
