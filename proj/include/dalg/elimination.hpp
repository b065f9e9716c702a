#pragma once

#include <cstdint>
#include <vector>

#include "dalg/diffpoly.hpp"

namespace dalg {

/// A differential polynomial regrouped as a univariate polynomial in one
/// derivative variable. `coefficients` runs from the top power down; the
/// first entry is nonzero and no entry mentions `variable`.
struct LeaderPoly {
  DerivVar variable;
  std::vector<DiffPoly> coefficients;

  std::uint32_t degree() const { return static_cast<std::uint32_t>(coefficients.size() - 1); }
  const DiffPoly& leading() const { return coefficients.front(); }
  /// Expands back to a DiffPoly.
  DiffPoly to_poly() const;
};

/// Throws ZeroPolynomial for A = 0. A free of `variable` gives degree 0.
LeaderPoly as_leader_poly(const DiffPoly& a, DerivVar variable);

using PolyMatrix = std::vector<std::vector<DiffPoly>>;

/// Sylvester matrix of size deg P + deg Q: deg Q shifted rows of P's
/// coefficients followed by deg P shifted rows of Q's.
PolyMatrix sylvester_matrix(const LeaderPoly& p, const LeaderPoly& q);

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact in the polynomial ring. The empty matrix has determinant 1.
DiffPoly bareiss_determinant(PolyMatrix m);

/// Res(P, Q) = det Sylvester(P, Q), with Res(c, Q) = c^deg Q,
/// Res(P, c) = c^deg P and Res(c1, c2) = 1 for degree-0 arguments.
/// Throws MathError("ZeroArgument") for a zero argument and
/// std::invalid_argument when the variables differ.
DiffPoly resultant(const LeaderPoly& p, const LeaderPoly& q);

/// Res_leader(A, S_A): the classical discriminant times +-I_A. Throws
/// ConstantPolynomial when A is free of main.
DiffPoly discriminant(const DiffPoly& a, Indet main);

}  // namespace dalg
