#pragma once

#include <cstdint>
#include <optional>

#include "dalg/diffpoly.hpp"
#include "dalg/reduction.hpp"

namespace dalg {

/// Elements constructed in the proof of the homomorphism extension theorem
/// for S = R{x}, b = B(x).
///
/// Transcendental case: `a` is a nonzero coefficient of B.
/// Algebraic case (x annihilated by the irreducible A): a = a1 * a2 * a3
/// where a1 comes from I_A, a2 from the discriminant D of A, and a3 from the
/// resultant r of B1 and A in the leader, B1 being the weak remainder of
/// S_A^n * B modulo [A]. Every homomorphism R -> F into a differentially
/// closed field that does not kill `a` extends to R{x} without killing b.
struct ChevalleyWitness {
  enum class Case { Transcendental, Algebraic };

  Case case_tag = Case::Transcendental;
  DiffPoly a;
  // Algebraic only.
  std::optional<DiffPoly> a1, a2, a3;
  std::optional<DiffPoly> discriminant;  // D
  std::optional<DiffPoly> resultant;     // r
  std::optional<DiffPoly> b1;
  std::optional<std::uint32_t> n;
  std::optional<ReductionCertificate> weak_certificate;

  friend bool operator==(const ChevalleyWitness&, const ChevalleyWitness&) = default;
};

const char* to_string(ChevalleyWitness::Case c);

/// Deterministic "nonzero coefficient in R": writes p as a sum of
/// main-indeterminate monomials with coefficients free of main and returns
/// the coefficient of the smallest such monomial under grlex. Requires p != 0.
DiffPoly select_coefficient(const DiffPoly& p, Indet main);

/// Builds the witness for target B, optionally with the minimal polynomial A
/// (asserted irreducible by the caller).
///
/// Throws MathError with reason ZeroTarget (B = 0), ReducesIntoIdeal
/// (B1 = 0) or VanishingResultant (r = 0, so A was not irreducible).
ChevalleyWitness chevalley_witness(const DiffPoly& target, const std::optional<DiffPoly>& minimal,
                                   Indet main);

/// Degree bound on Fract S over Fract R: finite (deg A) exactly when A has
/// order 0, i.e. A is an ordinary polynomial in the main indeterminate.
/// nullopt means no bound.
std::optional<std::uint32_t> degree_bound(const DiffPoly& a, Indet main);

}  // namespace dalg
