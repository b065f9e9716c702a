#pragma once

#include <cstdint>

#include "dalg/diffpoly.hpp"

namespace dalg {

/// Rank data of a polynomial relative to a main indeterminate y.
///
/// A polynomial free of y is Constant (it lies in the coefficient ring);
/// otherwise it is Proper with order r (highest derivative y^(r) present),
/// leader y^(r), and degree d in the leader.
struct RankProfile {
  enum class Kind { Constant, Proper };

  Kind kind = Kind::Constant;
  std::uint32_t order = 0;   // Proper only
  std::uint32_t degree = 0;  // Proper only
  DerivVar leader{};         // Proper only

  bool is_proper() const { return kind == Kind::Proper; }

  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/// Throws ZeroPolynomial for A = 0.
RankProfile rank_profile(const DiffPoly& a, Indet main);

/// Coefficient of leader^d. Throws ConstantPolynomial when A is free of main.
DiffPoly initial(const DiffPoly& a, Indet main);

/// dA / d(leader). Throws ConstantPolynomial when A is free of main.
DiffPoly separant(const DiffPoly& a, Indet main);

enum class RankOrder { Less, Equivalent, Greater };

/// A < B iff ord A < ord B, or equal orders and deg A < deg B; constants sit
/// below every proper polynomial. Ties are reported as Equivalent.
RankOrder rank_compare(const DiffPoly& a, const DiffPoly& b, Indet main);

const char* to_string(RankOrder order);

}  // namespace dalg
