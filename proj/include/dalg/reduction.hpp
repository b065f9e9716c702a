#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dalg/diffpoly.hpp"

namespace dalg {

enum class ReductionMode { Full, Weak };

const char* to_string(ReductionMode mode);

/// Machine-checkable witness of a Ritt division:
///
///   I_A^m * S_A^n * F = G + sum_k C_k * delta(A, k)
///
/// Full mode additionally promises G < A (or G = 0); Weak mode promises
/// m = 0 and ord G <= ord A.
struct ReductionCertificate {
  ReductionMode mode = ReductionMode::Full;
  Indet main;
  DiffPoly dividend;   // F
  DiffPoly divisor;    // A
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  DiffPoly remainder;  // G
  /// C_k keyed by derivative index k; zero cofactors are never stored.
  std::map<std::uint32_t, DiffPoly> cofactors;

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

/// One step of the working loop: the (order, degree) of the polynomial being
/// reduced, measured in its current leader before the step.
struct DescentStep {
  std::uint32_t order = 0;
  std::uint32_t degree = 0;

  friend auto operator<=>(const DescentStep&, const DescentStep&) = default;
};

/// Ritt's division algorithm of F by A with respect to `main`.
///
/// Derivatives above the order r of A are eliminated first, highest first,
/// using delta(A, k), which is linear in y^(r+k) with coefficient S_A. In
/// Full mode the degree in the leader y^(r) is then pushed below deg A by
/// pseudo-division with A. A multiplier (S_A or I_A) is applied only when the
/// leading coefficient is not already divisible by it; (m, n) are therefore
/// small but not guaranteed minimal.
///
/// F = 0 yields the trivial certificate. Throws MathError("ConstantDivisor")
/// when A is free of main. If `trace` is given, one DescentStep is appended
/// per iteration.
ReductionCertificate ritt_reduce(const DiffPoly& dividend, const DiffPoly& divisor, Indet main,
                                 ReductionMode mode, std::vector<DescentStep>* trace = nullptr);

/// Continues a Weak certificate by lowering the remainder's degree in the
/// leader of A while no initial multiplier is needed: a step is taken when
/// I_A divides the leading coefficient, or when A is linear in its leader (so
/// S_A = I_A and the multiplier counts toward n). The result is still a Weak
/// certificate with m = 0.
ReductionCertificate reduce_leader_by_separant(ReductionCertificate cert,
                                               std::vector<DescentStep>* trace = nullptr);

struct Verification {
  bool valid = true;
  /// Failed clause ("identity", "rank" or "divisor") when invalid.
  std::string clause;

  static Verification ok() { return {}; }
  static Verification fail(std::string c) { return {false, std::move(c)}; }
};

/// Re-expands I^m S^n F - G - sum C_k delta^k(A) and checks it is zero, then
/// checks the mode's rank condition on G.
Verification verify_certificate(const ReductionCertificate& cert);

struct MembershipResult {
  bool reduces_to_zero = false;
  ReductionCertificate certificate;
};

/// Full Ritt reduction of F by A; G = 0 means F lies in the saturation
/// [A] : (I_A S_A)^infinity. Reading this as membership in the prime ideal
/// {A} : S_A additionally needs A irreducible, which the caller asserts.
MembershipResult saturation_membership(const DiffPoly& f, const DiffPoly& a, Indet main);

}  // namespace dalg
