#include "dalg/elimination.hpp"

#include <stdexcept>

#include "dalg/errors.hpp"
#include "dalg/ranking.hpp"

namespace dalg {

DiffPoly LeaderPoly::to_poly() const {
  DiffPoly out;
  auto d = degree();
  for (std::uint32_t i = 0; i <= d; ++i)
    out += coefficients[i].times_monomial(Monomial(variable, d - i));
  return out;
}

LeaderPoly as_leader_poly(const DiffPoly& a, DerivVar variable) {
  if (a.is_zero()) throw zero_polynomial("leader polynomial");
  auto ascending = a.coefficients_in(variable);
  return LeaderPoly{variable, {ascending.rbegin(), ascending.rend()}};
}

PolyMatrix sylvester_matrix(const LeaderPoly& p, const LeaderPoly& q) {
  const std::uint32_t dp = p.degree();
  const std::uint32_t dq = q.degree();
  const std::size_t n = dp + dq;
  PolyMatrix m(n, std::vector<DiffPoly>(n));
  for (std::uint32_t row = 0; row < dq; ++row)
    for (std::uint32_t i = 0; i <= dp; ++i) m[row][row + i] = p.coefficients[i];
  for (std::uint32_t row = 0; row < dp; ++row)
    for (std::uint32_t i = 0; i <= dq; ++i) m[dq + row][row + i] = q.coefficients[i];
  return m;
}

DiffPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return DiffPoly(1L);
  bool negate = false;
  DiffPoly previous(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return DiffPoly{};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        DiffPoly numer = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = divide_exact(numer, previous);
        if (!q) throw std::logic_error("Bareiss step produced an inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = DiffPoly{};
    }
    previous = m[k][k];
  }
  DiffPoly det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

DiffPoly resultant(const LeaderPoly& p, const LeaderPoly& q) {
  if (p.coefficients.empty() || q.coefficients.empty() || p.leading().is_zero() ||
      q.leading().is_zero())
    throw MathError("ZeroArgument", "resultant of a zero polynomial");
  if (p.variable != q.variable)
    throw std::invalid_argument("resultant arguments use different variables");
  if (p.degree() == 0 && q.degree() == 0) return DiffPoly(1L);
  if (p.degree() == 0) return pow(p.leading(), q.degree());
  if (q.degree() == 0) return pow(q.leading(), p.degree());
  return bareiss_determinant(sylvester_matrix(p, q));
}

DiffPoly discriminant(const DiffPoly& a, Indet main) {
  auto profile = rank_profile(a, main);
  if (!profile.is_proper()) throw constant_polynomial("discriminant argument");
  return resultant(as_leader_poly(a, profile.leader),
                   as_leader_poly(a.partial(profile.leader), profile.leader));
}

}  // namespace dalg
