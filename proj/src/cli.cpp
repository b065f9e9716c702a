#include "dalg/cli.hpp"

#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "dalg/chevalley.hpp"
#include "dalg/document.hpp"
#include "dalg/elimination.hpp"
#include "dalg/errors.hpp"
#include "dalg/parser.hpp"
#include "dalg/ranking.hpp"
#include "dalg/reduction.hpp"

namespace dalg::cli {

namespace {

struct Options {
  std::string vars = "y";
  std::string main;
  std::string dividend, divisor, target, minimal, poly, compare, p, q, leader, expr;
  bool weak = false;
};

Context context_of(const Options& o) { return Context::from_list(o.vars); }

Indet main_of(const Options& o, const Context& ctx) {
  return o.main.empty() ? ctx.last() : ctx.at(o.main);
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Term listing used by the parse/format commands. Each term is written as
// "coefficient | factor factor ..." with factors "name@order^exponent", or
// "coefficient | 1" for the unit monomial.
Document terms_document(const DiffPoly& p, const Context& ctx) {
  Document doc;
  doc.set("kind", "terms");
  doc.set("vars", ctx.to_list());
  doc.set("canonical", format(p, ctx));
  std::size_t i = 0;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it, ++i) {
    std::string value = it->second.to_string() + " |";
    if (it->first.is_one()) value += " 1";
    for (const auto& [v, e] : it->first.factors())
      value += " " + ctx.name(v.indet) + "@" + std::to_string(v.order) + "^" + std::to_string(e);
    doc.set("term[" + std::to_string(i) + "]", value);
  }
  return doc;
}

std::uint32_t to_u32(const std::string& s) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || v > 0xffffffffUL)
    throw DocumentError("bad count '" + s + "' in term listing");
  return static_cast<std::uint32_t>(v);
}

DiffPoly poly_from_terms(const Document& doc, const Context& ctx) {
  DiffPoly p;
  for (const auto& [k, v] : doc.entries()) {
    if (k.rfind("term[", 0) != 0) continue;
    auto bar = v.find('|');
    if (bar == std::string::npos) throw DocumentError("term without '|': " + v);
    std::string coeff = v.substr(0, bar);
    coeff.erase(coeff.find_last_not_of(' ') + 1);
    Rational c;
    try {
      c = Rational::from_string(coeff);
    } catch (const std::exception&) {
      throw DocumentError("bad coefficient '" + coeff + "'");
    }
    std::istringstream factors(v.substr(bar + 1));
    std::vector<Monomial::Factor> parts;
    for (std::string f; factors >> f;) {
      if (f == "1") continue;
      auto at = f.find('@');
      auto caret = f.find('^');
      if (at == std::string::npos || caret == std::string::npos || caret < at)
        throw DocumentError("bad factor '" + f + "'");
      DerivVar var{ctx.at(f.substr(0, at)), to_u32(f.substr(at + 1, caret - at - 1))};
      parts.emplace_back(var, to_u32(f.substr(caret + 1)));
    }
    p.add_term(Monomial::from_factors(std::move(parts)), c);
  }
  return p;
}

void add_vars(CLI::App* sub, Options& o) {
  sub->add_option("--vars", o.vars, "Comma separated indeterminates, e.g. u,y")
      ->capture_default_str();
}

void add_main(CLI::App* sub, Options& o) {
  sub->add_option("--main", o.main, "Main indeterminate (default: last declared)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Ritt reduction, resultants and extension witnesses for differential "
               "polynomials",
               "dalg"};
  app.require_subcommand(1, 1);
  Options o;
  std::map<std::string, std::function<void(std::ostream&)>> actions;

  auto* reduce = app.add_subcommand("reduce", "Ritt division of a dividend by a divisor");
  add_vars(reduce, o);
  add_main(reduce, o);
  reduce->add_option("--dividend", o.dividend, "F")->required();
  reduce->add_option("--divisor", o.divisor, "A")->required();
  reduce->add_flag("--weak", o.weak, "Weak division (m = 0, ord G <= ord A)");
  actions["reduce"] = [&](std::ostream& os) {
    auto ctx = context_of(o);
    auto cert = ritt_reduce(parse(o.dividend, ctx), parse(o.divisor, ctx), main_of(o, ctx),
                            o.weak ? ReductionMode::Weak : ReductionMode::Full);
    os << certificate_document(cert, ctx).to_string();
  };

  app.add_subcommand("verify", "Check a certificate document read from stdin");
  actions["verify"] = [&](std::ostream& os) {
    auto [cert, ctx] = certificate_from_document(Document::from_string(read_all(in)));
    auto v = verify_certificate(cert);
    os << (v.valid ? "valid" : "invalid: " + v.clause) << "\n";
  };

  auto* witness = app.add_subcommand("witness", "Extension witness a = a1*a2*a3 for a target");
  add_vars(witness, o);
  add_main(witness, o);
  witness->add_option("--target", o.target, "B")->required();
  witness->add_option("--minimal", o.minimal, "Irreducible A with A(x) = 0, if x is algebraic");
  actions["witness"] = [&](std::ostream& os) {
    auto ctx = context_of(o);
    Indet main = main_of(o, ctx);
    DiffPoly target = parse(o.target, ctx);
    std::optional<DiffPoly> minimal;
    if (!o.minimal.empty()) minimal = parse(o.minimal, ctx);
    auto w = chevalley_witness(target, minimal, main);
    os << witness_document(w, target, minimal, main, ctx).to_string();
  };

  auto* res = app.add_subcommand("resultant", "Resultant of two polynomials in a leader");
  add_vars(res, o);
  res->add_option("--p", o.p, "First polynomial")->required();
  res->add_option("--q", o.q, "Second polynomial")->required();
  res->add_option("--leader", o.leader, "Elimination variable, e.g. y'")->required();
  actions["resultant"] = [&](std::ostream& os) {
    auto ctx = context_of(o);
    DerivVar v = parse_derivvar(o.leader, ctx);
    os << format(resultant(as_leader_poly(parse(o.p, ctx), v), as_leader_poly(parse(o.q, ctx), v)),
                 ctx)
       << "\n";
  };

  auto unary = [&](const std::string& name, const std::string& help,
                   std::function<void(const DiffPoly&, Indet, const Context&, std::ostream&)> fn) {
    auto* sub = app.add_subcommand(name, help);
    add_vars(sub, o);
    add_main(sub, o);
    sub->add_option("--poly", o.poly, "Polynomial")->required();
    if (name == "rank") sub->add_option("--compare", o.compare, "Compare against this polynomial");
    actions[name] = [&o, fn](std::ostream& os) {
      auto ctx = context_of(o);
      fn(parse(o.poly, ctx), main_of(o, ctx), ctx, os);
    };
  };

  unary("discriminant", "Res(A, S_A) in the leader",
        [](const DiffPoly& a, Indet main, const Context& ctx, std::ostream& os) {
          os << format(discriminant(a, main), ctx) << "\n";
        });
  unary("initial", "Initial I_A",
        [](const DiffPoly& a, Indet main, const Context& ctx, std::ostream& os) {
          os << format(initial(a, main), ctx) << "\n";
        });
  unary("separant", "Separant S_A",
        [](const DiffPoly& a, Indet main, const Context& ctx, std::ostream& os) {
          os << format(separant(a, main), ctx) << "\n";
        });
  unary("rank", "Order, degree and leader",
        [&o](const DiffPoly& a, Indet main, const Context& ctx, std::ostream& os) {
          auto p = rank_profile(a, main);
          Document doc;
          doc.set("kind", "rank");
          doc.set("profile", p.is_proper() ? "proper" : "constant");
          if (p.is_proper()) {
            doc.set("order", std::to_string(p.order));
            doc.set("degree", std::to_string(p.degree));
            doc.set("leader", format(p.leader, ctx));
          }
          if (!o.compare.empty())
            doc.set("compare", to_string(rank_compare(a, parse(o.compare, ctx), main)));
          os << doc.to_string();
        });
  unary("degree-bound", "Degree bound of the extension defined by A",
        [](const DiffPoly& a, Indet main, const Context&, std::ostream& os) {
          auto b = degree_bound(a, main);
          os << "bound: " << (b ? std::to_string(*b) : std::string("none")) << "\n";
        });

  auto* membership =
      app.add_subcommand("membership", "Full reduction; remainder zero means saturation member");
  add_vars(membership, o);
  add_main(membership, o);
  membership->add_option("--dividend", o.dividend, "F")->required();
  membership->add_option("--divisor", o.divisor, "A")->required();
  actions["membership"] = [&](std::ostream& os) {
    auto ctx = context_of(o);
    auto r = saturation_membership(parse(o.dividend, ctx), parse(o.divisor, ctx), main_of(o, ctx));
    auto doc = certificate_document(r.certificate, ctx);
    doc.set("result", r.reduces_to_zero ? "reduces-to-zero" : "remainder");
    os << doc.to_string();
  };

  auto* parse_cmd = app.add_subcommand("parse", "Parse an expression into a term listing");
  add_vars(parse_cmd, o);
  parse_cmd->add_option("--expr", o.expr, "Expression (default: read stdin)");
  actions["parse"] = [&](std::ostream& os) {
    auto ctx = context_of(o);
    std::string text = o.expr.empty() ? read_all(in) : o.expr;
    os << terms_document(parse(text, ctx), ctx).to_string();
  };

  app.add_subcommand("format", "Canonical text of a term listing read from stdin");
  actions["format"] = [&](std::ostream& os) {
    auto doc = Document::from_string(read_all(in));
    auto ctx = Context::from_list(doc.require("vars"));
    os << format(poly_from_terms(doc, ctx), ctx) << "\n";
  };

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::ostringstream buffer;
  try {
    for (auto* sub : app.get_subcommands()) actions.at(sub->get_name())(buffer);
  } catch (const Error& e) {
    err << "error: " << e.reason() << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::Math ? 2 : 1;
  } catch (const std::invalid_argument& e) {
    err << "error: InvalidArgument: " << e.what() << "\n";
    return 1;
  }
  out << buffer.str();
  return 0;
}

}  // namespace dalg::cli
