#include "dalg/document.hpp"

#include <charconv>

#include "dalg/errors.hpp"
#include "dalg/parser.hpp"

namespace dalg {

void Document::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> Document::get(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

const std::string& Document::require(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  throw DocumentError("missing key '" + std::string(key) + "'");
}

std::string Document::to_string() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
  return out;
}

Document Document::from_string(std::string_view text) {
  Document doc;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string line(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos || colon == 0)
      throw DocumentError("line " + std::to_string(line_no) + ": expected 'key: value'");
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t") + 1);
    if (doc.get(key)) throw DocumentError("duplicate key '" + key + "'");
    doc.entries_.emplace_back(std::move(key), std::move(value));
  }
  return doc;
}

namespace {

std::string key(std::string_view prefix, std::string_view name) {
  return std::string(prefix) + std::string(name);
}

std::uint32_t parse_count(const std::string& text, std::string_view what) {
  std::uint32_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw DocumentError("'" + std::string(what) + "' is not a non-negative integer: " + text);
  return out;
}

ReductionMode parse_mode(const std::string& text) {
  if (text == "full") return ReductionMode::Full;
  if (text == "weak") return ReductionMode::Weak;
  throw DocumentError("unknown mode '" + text + "'");
}

}  // namespace

Document certificate_document(const ReductionCertificate& cert, const Context& ctx,
                              std::string_view prefix) {
  Document doc;
  if (prefix.empty()) {
    doc.set("kind", "certificate");
    doc.set("vars", ctx.to_list());
  }
  doc.set(key(prefix, "mode"), to_string(cert.mode));
  doc.set(key(prefix, "main"), ctx.name(cert.main));
  doc.set(key(prefix, "m"), std::to_string(cert.m));
  doc.set(key(prefix, "n"), std::to_string(cert.n));
  doc.set(key(prefix, "F"), format(cert.dividend, ctx));
  doc.set(key(prefix, "A"), format(cert.divisor, ctx));
  doc.set(key(prefix, "G"), format(cert.remainder, ctx));
  for (const auto& [k, c] : cert.cofactors)
    doc.set(key(prefix, "C[" + std::to_string(k) + "]"), format(c, ctx));
  return doc;
}

ReductionCertificate certificate_from_document(const Document& doc, const Context& ctx,
                                               std::string_view prefix) {
  if (prefix.empty()) {
    if (auto kind = doc.get("kind"); kind && *kind != "certificate")
      throw DocumentError("expected a certificate document, got '" + *kind + "'");
  }
  ReductionCertificate cert;
  cert.mode = parse_mode(doc.require(key(prefix, "mode")));
  cert.main = ctx.at(doc.require(key(prefix, "main")));
  cert.m = parse_count(doc.require(key(prefix, "m")), "m");
  cert.n = parse_count(doc.require(key(prefix, "n")), "n");
  cert.dividend = parse(doc.require(key(prefix, "F")), ctx);
  cert.divisor = parse(doc.require(key(prefix, "A")), ctx);
  cert.remainder = parse(doc.require(key(prefix, "G")), ctx);
  const std::string cofactor_prefix = key(prefix, "C[");
  for (const auto& [k, v] : doc.entries()) {
    if (k.rfind(cofactor_prefix, 0) != 0) continue;
    if (k.back() != ']') throw DocumentError("malformed cofactor key '" + k + "'");
    auto index = parse_count(k.substr(cofactor_prefix.size(), k.size() - cofactor_prefix.size() - 1),
                             "cofactor index");
    DiffPoly c = parse(v, ctx);
    if (!c.is_zero()) cert.cofactors[index] = std::move(c);
  }
  return cert;
}

std::pair<ReductionCertificate, Context> certificate_from_document(const Document& doc,
                                                                   std::string_view prefix) {
  Context ctx = Context::from_list(doc.require("vars"));
  auto cert = certificate_from_document(doc, ctx, prefix);
  return {std::move(cert), std::move(ctx)};
}

Document witness_document(const ChevalleyWitness& w, const DiffPoly& target,
                          const std::optional<DiffPoly>& minimal, Indet main,
                          const Context& ctx) {
  Document doc;
  doc.set("kind", "witness");
  doc.set("vars", ctx.to_list());
  doc.set("main", ctx.name(main));
  doc.set("case", to_string(w.case_tag));
  doc.set("B", format(target, ctx));
  if (minimal) doc.set("A", format(*minimal, ctx));
  doc.set("a", format(w.a, ctx));
  if (w.case_tag == ChevalleyWitness::Case::Transcendental) return doc;

  doc.set("a1", format(*w.a1, ctx));
  doc.set("a2", format(*w.a2, ctx));
  doc.set("a3", format(*w.a3, ctx));
  doc.set("D", format(*w.discriminant, ctx));
  doc.set("r", format(*w.resultant, ctx));
  doc.set("n", std::to_string(*w.n));
  doc.set("B1", format(*w.b1, ctx));
  Document cert = certificate_document(*w.weak_certificate, ctx, "cert.");
  for (const auto& [k, v] : cert.entries()) doc.set(k, v);
  return doc;
}

ParsedWitness witness_from_document(const Document& doc) {
  if (doc.require("kind") != "witness") throw DocumentError("expected a witness document");
  ParsedWitness out;
  out.context = Context::from_list(doc.require("vars"));
  const Context& ctx = out.context;
  out.main = ctx.at(doc.require("main"));
  out.target = parse(doc.require("B"), ctx);
  if (auto a = doc.get("A")) out.minimal = parse(*a, ctx);

  auto& w = out.witness;
  const auto& tag = doc.require("case");
  if (tag == "transcendental")
    w.case_tag = ChevalleyWitness::Case::Transcendental;
  else if (tag == "algebraic")
    w.case_tag = ChevalleyWitness::Case::Algebraic;
  else
    throw DocumentError("unknown case '" + tag + "'");
  w.a = parse(doc.require("a"), ctx);
  if (w.case_tag == ChevalleyWitness::Case::Transcendental) return out;

  w.a1 = parse(doc.require("a1"), ctx);
  w.a2 = parse(doc.require("a2"), ctx);
  w.a3 = parse(doc.require("a3"), ctx);
  w.discriminant = parse(doc.require("D"), ctx);
  w.resultant = parse(doc.require("r"), ctx);
  w.n = parse_count(doc.require("n"), "n");
  w.b1 = parse(doc.require("B1"), ctx);
  w.weak_certificate = certificate_from_document(doc, ctx, "cert.");
  return out;
}

}  // namespace dalg
