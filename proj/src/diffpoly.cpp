#include "dalg/diffpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "dalg/errors.hpp"

namespace dalg {

// ---------------------------------------------------------------- Context

Context::Context(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j])
        throw InputError("DuplicateIndeterminate", "indeterminate '" + names_[i] +
                                                       "' declared twice");
    }
  }
}

Context Context::from_list(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string name(list.substr(start, comma - start));
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    bool ok = !name.empty() && name[0] >= 'a' && name[0] <= 'z' &&
              std::all_of(name.begin(), name.end(), [](char c) {
                return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
              });
    if (!ok) throw InputError("BadIndeterminateList", "invalid indeterminate name '" + name + "'");
    names.push_back(std::move(name));
    start = comma + 1;
  }
  return Context(std::move(names));
}

std::optional<Indet> Context::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Indet{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

Indet Context::at(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownIndeterminate(std::string(name));
}

Indet Context::last() const {
  if (names_.empty()) throw InputError("EmptyContext", "no indeterminates declared");
  return Indet{static_cast<std::uint32_t>(names_.size() - 1)};
}

std::string Context::to_list() const {
  std::string out;
  for (const auto& n : names_) {
    if (!out.empty()) out += ',';
    out += n;
  }
  return out;
}

// --------------------------------------------------------------- Monomial

Monomial::Monomial(DerivVar v, std::uint32_t exponent) {
  if (exponent > 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(DerivVar v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, DerivVar x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::without(DerivVar v) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    m.factors_.push_back(f);
    m.degree_ += f.second;
  }
  return m;
}

std::pair<Monomial, Monomial> Monomial::split(Indet indet) const {
  std::pair<Monomial, Monomial> out;
  for (const auto& f : factors_) {
    Monomial& dst = f.first.indet == indet ? out.first : out.second;
    dst.factors_.push_back(f);
    dst.degree_ += f.second;
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q;
  auto it = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    std::uint32_t sub = 0;
    if (it != factors_.end() && it->first == v) {
      sub = it->second;
      ++it;
    }
    if (e > sub) {
      q.factors_.emplace_back(v, e - sub);
      q.degree_ += e - sub;
    }
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  auto fa = a.factors();
  auto fb = b.factors();
  auto i = fa.rbegin();
  auto j = fb.rbegin();
  for (; i != fa.rend() && j != fb.rend(); ++i, ++j) {
    if (i->first != j->first) return i->first <=> j->first;
    if (i->second != j->second) return i->second <=> j->second;
  }
  if (i != fa.rend()) return std::strong_ordering::greater;
  if (j != fb.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// --------------------------------------------------------------- DiffPoly

DiffPoly::DiffPoly(Rational c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

DiffPoly::DiffPoly(DerivVar v) { terms_.emplace(Monomial(v), Rational(1)); }

DiffPoly::DiffPoly(const Monomial& m, Rational c) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

bool DiffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational DiffPoly::constant_term() const { return coefficient(Monomial{}); }

Rational DiffPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<DerivVar> DiffPoly::variables() const {
  std::vector<DerivVar> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.push_back(f.first);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool DiffPoly::mentions(Indet indet) const { return order_in(indet).has_value(); }

std::optional<std::uint32_t> DiffPoly::order_in(Indet indet) const {
  std::optional<std::uint32_t> best;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) {
      if (f.first.indet == indet && (!best || f.first.order > *best)) best = f.first.order;
    }
  }
  return best;
}

std::uint32_t DiffPoly::degree_in(DerivVar v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::vector<DiffPoly> DiffPoly::coefficients_in(DerivVar v) const {
  std::vector<DiffPoly> out(degree_in(v) + 1);
  for (const auto& [m, c] : terms_) {
    auto e = m.exponent(v);
    out[e].terms_.emplace(e == 0 ? m : m.without(v), c);
  }
  return out;
}

DiffPoly DiffPoly::partial(DerivVar v) const {
  DiffPoly out;
  for (const auto& [m, c] : terms_) {
    auto e = m.exponent(v);
    if (e == 0) continue;
    auto rest = m.without(v) * Monomial(v, e - 1);
    out.add_term(rest, c * Rational(static_cast<long>(e)));
  }
  return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& o) {
  *this = *this * o;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

DiffPoly operator-(const DiffPoly& a) { return a.scaled(Rational(-1)); }

DiffPoly DiffPoly::scaled(const Rational& c) const {
  DiffPoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, coef * c);
  return out;
}

DiffPoly DiffPoly::times_monomial(const Monomial& m) const {
  DiffPoly out;
  // Multiplication by a monomial preserves grlex order.
  for (const auto& [mm, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c);
  return out;
}

DiffPoly pow(const DiffPoly& p, std::uint32_t exponent) {
  DiffPoly result(1L);
  DiffPoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

DiffPoly power_of(DerivVar v, std::uint32_t exponent) {
  return DiffPoly(Monomial(v, exponent), Rational(1));
}

namespace {

DiffPoly delta_once(const DiffPoly& p) {
  DiffPoly out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors()) {
      // d/dt v^e = e v^(e-1) v'
      auto rest = m.without(v) * Monomial(v, e - 1) * Monomial(v.next());
      out.add_term(rest, c * Rational(static_cast<long>(e)));
    }
  }
  return out;
}

std::string describe(DerivVar v, const Context& ctx) {
  std::string name = v.indet.index < ctx.size() ? ctx.name(v.indet)
                                                : "#" + std::to_string(v.indet.index);
  if (v.order <= 3) return name + std::string(v.order, '\'');
  return name + "^(" + std::to_string(v.order) + ")";
}

}  // namespace

DiffPoly delta(const DiffPoly& p, std::uint32_t k) {
  DiffPoly out = p;
  for (std::uint32_t i = 0; i < k && !out.is_zero(); ++i) out = delta_once(out);
  return out;
}

Rational evaluate(const DiffPoly& p, const Assignment& assignment, const Context& ctx) {
  Rational total;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw MissingAssignment(describe(v, ctx));
      term *= it->second.pow(e);
    }
    total += term;
  }
  return total;
}

DiffPoly diff_substitute(const DiffPoly& p, Indet target, const DiffPoly& image) {
  if (image.mentions(target))
    throw MathError("RecursiveSubstitution", "substituted image mentions its own target");
  std::map<std::uint32_t, DiffPoly> derivs;  // k -> delta(image, k)
  auto image_deriv = [&](std::uint32_t k) -> const DiffPoly& {
    auto it = derivs.find(k);
    if (it == derivs.end()) it = derivs.emplace(k, delta(image, k)).first;
    return it->second;
  };
  DiffPoly out;
  for (const auto& [m, c] : p.terms()) {
    auto [hit, rest] = m.split(target);
    DiffPoly term(rest, c);
    for (const auto& [v, e] : hit.factors()) term *= pow(image_deriv(v.order), e);
    out += term;
  }
  return out;
}

std::optional<DiffPoly> divide_exact(const DiffPoly& p, const DiffPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("exact division by the zero polynomial");
  if (divisor.is_constant()) return p.scaled(Rational(1) / divisor.constant_term());
  const auto& [lead_m, lead_c] = divisor.leading_term();
  DiffPoly rest = p;
  DiffPoly quotient;
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_term();
    if (!lead_m.divides(m)) return std::nullopt;
    Monomial qm = lead_m.quotient_of(m);
    Rational qc = c / lead_c;
    quotient.add_term(qm, qc);
    rest -= divisor.times_monomial(qm).scaled(qc);
  }
  return quotient;
}

}  // namespace dalg
