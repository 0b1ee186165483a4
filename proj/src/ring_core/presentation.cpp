#include "noethera/presentation.hpp"

#include <sstream>

#include "noethera/polynomial_text.hpp"

namespace noethera {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string format_polynomial(const std::vector<std::int64_t>& ascending, char var) {
  std::size_t deg = ascending.size();
  while (deg > 0 && ascending[deg - 1] == 0) --deg;
  if (deg == 0) return "0";
  std::string out;
  for (std::size_t k = deg; k-- > 0;) {
    const std::int64_t c = ascending[k];
    if (c == 0) continue;
    const bool first = out.empty();
    std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (c < 0)
      out += '-';
    else if (!first)
      out += '+';
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

bool Presentation::structural() const {
  if (std::holds_alternative<ExplicitPresentation>(value)) return false;
  if (auto* prod = std::get_if<ProductPresentation>(&value)) {
    for (const auto& f : prod->factors)
      if (!f.structural()) return false;
  }
  if (auto* q = std::get_if<QuotientPresentation>(&value)) return q->parent && q->parent->structural();
  return true;
}

namespace {

struct TextVisitor {
  std::string operator()(const ModularPresentation& m) const { return "Z/" + std::to_string(m.n); }
  std::string operator()(const GaloisPresentation& g) const {
    std::vector<std::int64_t> f(g.f.begin(), g.f.end());
    return "GF(" + std::to_string(g.p) + "," + format_polynomial(f) + ")";
  }
  std::string operator()(const AlgebraPresentation& a) const {
    std::ostringstream os;
    os << "algebra(" << a.p << "," << a.dim << ";";
    for (std::size_t k = 0; k < a.constants.size(); ++k) {
      if (k) os << "|";
      for (std::size_t i = 0; i < a.constants[k].size(); ++i) os << (i ? " " : "") << a.constants[k][i];
    }
    os << ")";
    return os.str();
  }
  std::string operator()(const ProductPresentation& p) const {
    std::string out = "product(";
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
      if (i) out += ",";
      out += p.factors[i].text();
    }
    return out + ")";
  }
  std::string operator()(const QuotientPresentation& q) const {
    return "quot(" + (q.parent ? q.parent->text() : std::string("?")) + ";" + q.ideal.to_hex() + ")";
  }
  std::string operator()(const ExplicitPresentation&) const { return "explicit"; }
};

}  // namespace

std::string Presentation::text() const { return std::visit(TextVisitor{}, value); }

}  // namespace noethera
