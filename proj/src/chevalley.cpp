#include "dalg/chevalley.hpp"

#include "dalg/elimination.hpp"
#include "dalg/errors.hpp"
#include "dalg/ranking.hpp"

namespace dalg {

const char* to_string(ChevalleyWitness::Case c) {
  return c == ChevalleyWitness::Case::Algebraic ? "algebraic" : "transcendental";
}

DiffPoly select_coefficient(const DiffPoly& p, Indet main) {
  if (p.is_zero()) throw zero_polynomial("coefficient source");
  std::map<Monomial, DiffPoly, GrlexLess> groups;
  for (const auto& [m, c] : p.terms()) {
    auto [in_main, rest] = m.split(main);
    groups[in_main].add_term(rest, c);
  }
  return groups.begin()->second;
}

ChevalleyWitness chevalley_witness(const DiffPoly& target, const std::optional<DiffPoly>& minimal,
                                   Indet main) {
  if (target.is_zero()) throw MathError("ZeroTarget", "target B is zero");
  ChevalleyWitness w;
  if (!minimal) {
    w.case_tag = ChevalleyWitness::Case::Transcendental;
    w.a = select_coefficient(target, main);
    return w;
  }

  const DiffPoly& a = *minimal;
  auto profile = rank_profile(a, main);
  if (!profile.is_proper())
    throw MathError("ConstantDivisor", "minimal polynomial is free of the main indeterminate");

  w.case_tag = ChevalleyWitness::Case::Algebraic;
  w.a1 = select_coefficient(initial(a, main), main);
  w.discriminant = discriminant(a, main);
  if (w.discriminant->is_zero())
    throw MathError("VanishingDiscriminant", "discriminant of A vanishes; A is not irreducible");
  w.a2 = select_coefficient(*w.discriminant, main);

  auto cert = reduce_leader_by_separant(ritt_reduce(target, a, main, ReductionMode::Weak));
  if (cert.remainder.is_zero())
    throw MathError("ReducesIntoIdeal", "S_A^n * B lies in [A]; b vanishes in S");
  w.n = cert.n;
  w.b1 = cert.remainder;
  w.weak_certificate = std::move(cert);

  w.resultant = resultant(as_leader_poly(*w.b1, profile.leader), as_leader_poly(a, profile.leader));
  if (w.resultant->is_zero())
    throw MathError("VanishingResultant", "B1 and A share a root; A is not irreducible");
  w.a3 = select_coefficient(*w.resultant, main);

  w.a = *w.a1 * *w.a2 * *w.a3;
  return w;
}

std::optional<std::uint32_t> degree_bound(const DiffPoly& a, Indet main) {
  auto profile = rank_profile(a, main);
  if (!profile.is_proper()) throw constant_polynomial("degree_bound argument");
  if (profile.order == 0) return profile.degree;
  return std::nullopt;
}

}  // namespace dalg
