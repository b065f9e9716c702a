#include "dalg/reduction.hpp"

#include <cassert>

#include "dalg/errors.hpp"
#include "dalg/ranking.hpp"

namespace dalg {

const char* to_string(ReductionMode mode) {
  return mode == ReductionMode::Full ? "full" : "weak";
}

namespace {

/// Working state of a division. Maintains
///   I^m S^n F = work + sum_k cofactors[k] * delta(A, k)
/// after every step.
class Reducer {
 public:
  Reducer(ReductionCertificate& cert, std::vector<DescentStep>* trace)
      : cert_(cert), trace_(trace) {
    auto profile = rank_profile(cert.divisor, cert.main);
    if (!profile.is_proper())
      throw MathError("ConstantDivisor", "divisor is free of the main indeterminate");
    order_ = profile.order;
    degree_ = profile.degree;
    leader_ = profile.leader;
    initial_ = initial(cert.divisor, cert.main);
    separant_ = cert.divisor.partial(leader_);
  }

  /// Eliminates every derivative of main above the order of A.
  void reduce_proper_derivatives() {
    for (;;) {
      auto s = work().order_in(cert_.main);
      if (!s || *s <= order_) return;
      DerivVar v{cert_.main, *s};
      std::uint32_t k = *s - order_;
      // delta(A, k) = S_A * v + (terms of order < s)
      step(v, 1, k, derivative_of_divisor(k), separant_, /*multiplier_counts_n=*/true);
    }
  }

  /// Lowers the degree in the leader of A below deg A using I_A.
  void reduce_leader_full() {
    while (leader_reducible()) step(leader_, degree_, 0, cert_.divisor, initial_, false);
  }

  /// Leader reduction restricted to steps that leave m untouched.
  void reduce_leader_weak() {
    while (leader_reducible()) {
      DiffPoly lc = work().coefficients_in(leader_).back();
      bool exact = divide_exact(lc, initial_).has_value();
      if (!exact && degree_ != 1) return;
      // With deg A = 1 the separant equals the initial.
      step(leader_, degree_, 0, cert_.divisor, initial_, /*multiplier_counts_n=*/true);
    }
  }

 private:
  DiffPoly& work() { return cert_.remainder; }

  bool leader_reducible() {
    auto s = work().order_in(cert_.main);
    return s && *s == order_ && work().degree_in(leader_) >= degree_;
  }

  const DiffPoly& derivative_of_divisor(std::uint32_t k) {
    auto it = derivatives_.find(k);
    if (it == derivatives_.end()) it = derivatives_.emplace(k, delta(cert_.divisor, k)).first;
    return it->second;
  }

  /// Cancels the top power of `v` in the working polynomial against `rel`,
  /// whose leading part in `v` is `lead_coeff * v^rel_degree`.
  void step(DerivVar v, std::uint32_t rel_degree, std::uint32_t k, const DiffPoly& rel,
            const DiffPoly& lead_coeff, bool multiplier_counts_n) {
    auto coeffs = work().coefficients_in(v);
    auto e = static_cast<std::uint32_t>(coeffs.size() - 1);
    assert(e >= rel_degree);
    record(DescentStep{v.order, e});

    Monomial shift(v, e - rel_degree);
    DiffPoly factor;
    if (auto q = divide_exact(coeffs.back(), lead_coeff)) {
      factor = q->times_monomial(shift);
    } else {
      factor = coeffs.back().times_monomial(shift);
      work() = work() * lead_coeff;
      for (auto& [idx, c] : cert_.cofactors) c = c * lead_coeff;
      ++(multiplier_counts_n ? cert_.n : cert_.m);
    }
    work() -= factor * rel;
    auto& slot = cert_.cofactors[k];
    slot += factor;
    if (slot.is_zero()) cert_.cofactors.erase(k);
  }

  void record(DescentStep s) {
    // Each step strictly lowers (order, degree) lexicographically.
    assert(!last_ || s < *last_);
    last_ = s;
    if (trace_) trace_->push_back(s);
  }

  ReductionCertificate& cert_;
  std::vector<DescentStep>* trace_;
  std::uint32_t order_ = 0;
  std::uint32_t degree_ = 0;
  DerivVar leader_;
  DiffPoly initial_;
  DiffPoly separant_;
  std::map<std::uint32_t, DiffPoly> derivatives_;
  std::optional<DescentStep> last_;
};

}  // namespace

ReductionCertificate ritt_reduce(const DiffPoly& dividend, const DiffPoly& divisor, Indet main,
                                 ReductionMode mode, std::vector<DescentStep>* trace) {
  ReductionCertificate cert;
  cert.mode = mode;
  cert.main = main;
  cert.dividend = dividend;
  cert.divisor = divisor;
  cert.remainder = dividend;
  if (divisor.is_zero() || !divisor.mentions(main))
    throw MathError("ConstantDivisor", "divisor is free of the main indeterminate");
  if (dividend.is_zero()) return cert;

  Reducer reducer(cert, trace);
  reducer.reduce_proper_derivatives();
  if (mode == ReductionMode::Full) reducer.reduce_leader_full();
  return cert;
}

ReductionCertificate reduce_leader_by_separant(ReductionCertificate cert,
                                               std::vector<DescentStep>* trace) {
  if (cert.mode != ReductionMode::Weak || cert.m != 0)
    throw std::invalid_argument("reduce_leader_by_separant needs a weak certificate");
  if (cert.remainder.is_zero()) return cert;
  Reducer reducer(cert, trace);
  reducer.reduce_proper_derivatives();
  reducer.reduce_leader_weak();
  return cert;
}

Verification verify_certificate(const ReductionCertificate& cert) {
  const auto& a = cert.divisor;
  if (a.is_zero() || !a.mentions(cert.main)) return Verification::fail("divisor");

  DiffPoly lhs = pow(initial(a, cert.main), cert.m) * pow(separant(a, cert.main), cert.n) *
                 cert.dividend;
  DiffPoly residual = lhs - cert.remainder;
  for (const auto& [k, c] : cert.cofactors) residual -= c * delta(a, k);
  if (!residual.is_zero()) return Verification::fail("identity");

  const auto& g = cert.remainder;
  if (g.is_zero()) return Verification::ok();
  if (cert.mode == ReductionMode::Full) {
    if (rank_compare(g, a, cert.main) != RankOrder::Less) return Verification::fail("rank");
  } else {
    auto og = g.order_in(cert.main);
    if (cert.m != 0 || (og && *og > *a.order_in(cert.main))) return Verification::fail("rank");
  }
  return Verification::ok();
}

MembershipResult saturation_membership(const DiffPoly& f, const DiffPoly& a, Indet main) {
  MembershipResult out;
  out.certificate = ritt_reduce(f, a, main, ReductionMode::Full);
  out.reduces_to_zero = out.certificate.remainder.is_zero();
  return out;
}

}  // namespace dalg
