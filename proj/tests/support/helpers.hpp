#pragma once

#include <string_view>

#include "dalg/parser.hpp"
#include "support/random_poly.hpp"

namespace dalg::testing {

/// Parses in the {u, y} context.
inline DiffPoly P(std::string_view text) { return parse(text, uy_context()); }

inline std::string F(const DiffPoly& p) { return format(p, uy_context()); }

inline DerivVar y(std::uint32_t k) { return DerivVar{kY, k}; }
inline DerivVar u(std::uint32_t k) { return DerivVar{kU, k}; }

}  // namespace dalg::testing
