#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace noethera {

/// Formats ascending coefficients as "x^2+x+1"; the empty list prints "0".
/// Trailing zero coefficients are ignored.
std::string format_polynomial(const std::vector<std::int64_t>& ascending, char var = 'x');

}  // namespace noethera
