#include "dalg/parser.hpp"

#include <cctype>
#include <limits>

#include "dalg/errors.hpp"

namespace dalg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Context& ctx) : text_(text), ctx_(ctx) {}

  DiffPoly parse_all() {
    skip_space();
    if (at_end()) throw SyntaxError(pos_, "expression");
    DiffPoly p = expr();
    skip_space();
    if (!at_end()) throw SyntaxError(pos_, "operator or end of input");
    return p;
  }

  DerivVar derivvar_all() {
    skip_space();
    if (!is_lower(peek())) throw SyntaxError(pos_, "indeterminate");
    DerivVar v = derivvar();
    skip_space();
    if (!at_end()) throw SyntaxError(pos_, "end of input");
    return v;
  }

 private:
  static bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  /// Skips whitespace, then consumes `c` if it is next.
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw SyntaxError(pos_, std::string("'") + c + "'");
  }

  DiffPoly expr() {
    DiffPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  DiffPoly term() {
    bool negate = accept('-');
    DiffPoly acc = factor();
    while (accept('*')) acc *= factor();
    return negate ? -acc : acc;
  }

  DiffPoly factor() {
    DiffPoly b = base();
    if (accept('^')) {
      skip_space();
      return pow(b, small_nat());
    }
    return b;
  }

  DiffPoly base() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      DiffPoly inner = expr();
      expect(')');
      return inner;
    }
    if (is_digit(c)) return DiffPoly(rational());
    if (is_lower(c)) return DiffPoly(derivvar());
    throw SyntaxError(pos_, "number, indeterminate or '('");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    mpz_class num(digits(), 10);
    mpz_class den = 1;
    if (accept('/')) {
      skip_space();
      std::size_t at = pos_;
      den = mpz_class(digits(), 10);
      if (den == 0) throw SyntaxError(at, "nonzero denominator");
    }
    return Rational(num, den);
  }

  std::uint32_t small_nat() {
    std::size_t at = pos_;
    mpz_class value(digits(), 10);
    if (value > std::numeric_limits<std::uint32_t>::max()) throw ExponentOutOfRange(at);
    return static_cast<std::uint32_t>(value.get_ui());
  }

  DerivVar derivvar() {
    std::size_t start = pos_;
    while (is_lower(peek()) || is_digit(peek())) ++pos_;
    Indet indet = ctx_.at(text_.substr(start, pos_ - start));

    // "^(" introduces a derivative order; a bare '^' is left for factor().
    std::size_t save = pos_;
    if (accept('^')) {
      if (accept('(')) {
        skip_space();
        std::uint32_t k = small_nat();
        expect(')');
        return DerivVar{indet, k};
      }
      pos_ = save;
    }
    std::uint32_t primes = 0;
    while (accept('\'')) ++primes;
    return DerivVar{indet, primes};
  }

  std::string_view text_;
  const Context& ctx_;
  std::size_t pos_ = 0;
};

void append_monomial(std::string& out, const Monomial& m, const Context& ctx) {
  bool first = true;
  for (const auto& [v, e] : m.factors()) {
    if (!first) out += '*';
    first = false;
    std::string name = format(v, ctx);
    if (e == 1) {
      out += name;
    } else {
      if (v.order > 0)
        out += "(" + name + ")";
      else
        out += name;
      out += "^" + std::to_string(e);
    }
  }
}

}  // namespace

DiffPoly parse(std::string_view text, const Context& ctx) {
  return Parser(text, ctx).parse_all();
}

DerivVar parse_derivvar(std::string_view text, const Context& ctx) {
  return Parser(text, ctx).derivvar_all();
}

std::string format(DerivVar v, const Context& ctx) {
  const std::string& name = ctx.name(v.indet);
  if (v.order <= 3) return name + std::string(v.order, '\'');
  return name + "^(" + std::to_string(v.order) + ")";
}

std::string format(const DiffPoly& p, const Context& ctx) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    first = false;
    Rational mag = c.abs();
    if (m.is_one()) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    append_monomial(out, m, ctx);
  }
  return out;
}

}  // namespace dalg
