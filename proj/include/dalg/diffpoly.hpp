#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dalg/rational.hpp"

namespace dalg {

/// Index of a differential indeterminate within its Context.
struct Indet {
  std::uint32_t index = 0;

  friend auto operator<=>(const Indet&, const Indet&) = default;
};

/// The k-th derivative of an indeterminate. Ordered by (declaration index,
/// derivative order).
struct DerivVar {
  Indet indet;
  std::uint32_t order = 0;

  DerivVar next() const { return {indet, order + 1}; }

  friend auto operator<=>(const DerivVar&, const DerivVar&) = default;
};

/// The declared, ordered set of differential indeterminates.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<std::string> names);

  /// Parses a comma separated list such as "u,y".
  static Context from_list(std::string_view list);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Indet i) const { return names_.at(i.index); }
  std::optional<Indet> find(std::string_view name) const;
  /// Like find() but throws UnknownIndeterminate.
  Indet at(std::string_view name) const;
  Indet last() const;

  /// Comma separated names, the inverse of from_list().
  std::string to_list() const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<std::string> names_;
};

/// Power product of derivative variables. Factors are kept sorted by
/// DerivVar with strictly positive exponents; the empty product is 1.
class Monomial {
 public:
  using Factor = std::pair<DerivVar, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(DerivVar v, std::uint32_t exponent = 1);
  /// Factors may be unsorted and may repeat; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint64_t total_degree() const { return degree_; }
  std::uint32_t exponent(DerivVar v) const;

  /// The monomial with the factor for `v` removed.
  Monomial without(DerivVar v) const;
  /// Factors whose indeterminate is `indet` (first) and the rest (second).
  std::pair<Monomial, Monomial> split(Indet indet) const;

  bool divides(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<Factor> factors_;
  std::uint64_t degree_ = 0;
};

/// Graded lexicographic order: total degree, then exponents compared from
/// the largest DerivVar down.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) < 0;
  }
};

/// Sparse differential polynomial with rational coefficients. No zero
/// coefficient is ever stored, so structural equality is mathematical
/// equality.
class DiffPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  DiffPoly() = default;
  DiffPoly(Rational c);  // NOLINT(google-explicit-constructor)
  DiffPoly(long c) : DiffPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit DiffPoly(DerivVar v);
  DiffPoly(const Monomial& m, Rational c);

  /// Terms in ascending grlex order.
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True for rational constants, including zero.
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// Largest term under grlex. Requires !is_zero().
  const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }

  /// Adds c·m in place.
  void add_term(const Monomial& m, const Rational& c);

  /// Every DerivVar that occurs, sorted.
  std::vector<DerivVar> variables() const;
  bool mentions(Indet indet) const;
  /// Highest derivative order of `indet` present, or nullopt when absent.
  std::optional<std::uint32_t> order_in(Indet indet) const;
  /// Degree in the single variable `v` (0 when absent).
  std::uint32_t degree_in(DerivVar v) const;
  /// Coefficients of v^0, v^1, ..., v^degree_in(v); none mention v.
  std::vector<DiffPoly> coefficients_in(DerivVar v) const;
  /// Formal partial derivative with respect to `v`.
  DiffPoly partial(DerivVar v) const;

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const DiffPoly& o);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator-(const DiffPoly& a);
  friend bool operator==(const DiffPoly& a, const DiffPoly& b) { return a.terms_ == b.terms_; }

  DiffPoly scaled(const Rational& c) const;
  DiffPoly times_monomial(const Monomial& m) const;

 private:
  TermMap terms_;
};

DiffPoly pow(const DiffPoly& p, std::uint32_t exponent);

/// v^exponent as a polynomial.
DiffPoly power_of(DerivVar v, std::uint32_t exponent);

/// k-fold application of the derivation sending y^(j) to y^(j+1).
DiffPoly delta(const DiffPoly& p, std::uint32_t k = 1);

using Assignment = std::map<DerivVar, Rational>;

/// Exact value of `p` under `assignment`. The context is only used to name
/// the missing variable in MissingAssignment.
Rational evaluate(const DiffPoly& p, const Assignment& assignment, const Context& ctx);

/// Replaces every y^(k) of `target` by delta(image, k). Throws
/// MathError("RecursiveSubstitution") when image mentions target.
DiffPoly diff_substitute(const DiffPoly& p, Indet target, const DiffPoly& image);

/// Quotient q with p = q·divisor, or nullopt when divisor does not divide p
/// exactly in the polynomial ring. Throws std::domain_error on a zero divisor.
std::optional<DiffPoly> divide_exact(const DiffPoly& p, const DiffPoly& divisor);

}  // namespace dalg
