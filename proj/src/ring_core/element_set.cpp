#include "noethera/element_set.hpp"

#include "noethera/error.hpp"

namespace noethera {

std::size_t ElementSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

std::string ElementSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t n = (universe_ + 3) / 4;
  std::string out(n, '0');
  for (std::size_t k = 0; k < n; ++k) {
    unsigned v = 0;
    for (unsigned j = 0; j < 4; ++j) {
      const std::size_t e = 4 * k + j;
      if (e < universe_ && test(static_cast<Elem>(e))) v |= 1u << j;
    }
    out[k] = kDigits[v];
  }
  return out;
}

ElementSet ElementSet::from_hex(std::string_view hex, std::size_t universe) {
  if (hex.size() != (universe + 3) / 4)
    throw InputError("bitset hex has length " + std::to_string(hex.size()) + ", expected " +
                     std::to_string((universe + 3) / 4));
  ElementSet s(universe);
  for (std::size_t k = 0; k < hex.size(); ++k) {
    const char c = hex[k];
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a' + 10);
    else
      throw InputError(std::string("bad hex digit '") + c + "'");
    for (unsigned j = 0; j < 4; ++j) {
      if (!((v >> j) & 1u)) continue;
      const std::size_t e = 4 * k + j;
      if (e >= universe) throw InputError("bitset hex sets bits past the ring size");
      s.set(static_cast<Elem>(e));
    }
  }
  return s;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size() && i < wb.size(); ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (!diff) continue;
    const std::uint64_t low = diff & (~diff + 1);
    // The set holding the lowest differing element sorts first.
    return (wa[i] & low) != 0;
  }
  return wa.size() < wb.size();
}

}  // namespace noethera
