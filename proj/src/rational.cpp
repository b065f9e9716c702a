#include "dalg/rational.hpp"

#include <stdexcept>

namespace dalg {

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_string(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (num.set_str(s.substr(0, slash), 10) != 0)
    throw std::invalid_argument("bad rational numerator: " + s);
  if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0)
    throw std::invalid_argument("bad rational denominator: " + s);
  return Rational(num, den);
}

Rational Rational::pow(std::uint32_t exponent) const {
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(std::move(out));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

}  // namespace dalg
