#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dalg/chevalley.hpp"
#include "dalg/diffpoly.hpp"
#include "dalg/reduction.hpp"

namespace dalg {

/// Line-oriented "key: value" document. Keys keep insertion order and may
/// not contain ':' or leading/trailing spaces; values are single lines.
class Document {
 public:
  using Entry = std::pair<std::string, std::string>;

  void set(std::string key, std::string value);
  std::optional<std::string> get(std::string_view key) const;
  /// Throws DocumentError when missing.
  const std::string& require(std::string_view key) const;
  const std::vector<Entry>& entries() const { return entries_; }

  std::string to_string() const;
  /// Ignores blank lines and lines starting with '#'. Throws DocumentError.
  static Document from_string(std::string_view text);

 private:
  std::vector<Entry> entries_;
};

// Certificate documents carry the keys
//   kind, vars, mode, main, m, n, F, A, G, C[k]...
// and witness documents
//   kind, vars, main, case, B, a, and for the algebraic case
//   A, a1, a2, a3, D, r, n, B1 plus the weak certificate under "cert." keys.
// Polynomials are written in canonical text.

Document certificate_document(const ReductionCertificate& cert, const Context& ctx,
                              std::string_view prefix = "");
/// Reads the context from the "vars" key.
std::pair<ReductionCertificate, Context> certificate_from_document(const Document& doc,
                                                                   std::string_view prefix = "");
ReductionCertificate certificate_from_document(const Document& doc, const Context& ctx,
                                               std::string_view prefix = "");

Document witness_document(const ChevalleyWitness& w, const DiffPoly& target,
                          const std::optional<DiffPoly>& minimal, Indet main,
                          const Context& ctx);

struct ParsedWitness {
  Context context;
  Indet main;
  DiffPoly target;
  std::optional<DiffPoly> minimal;
  ChevalleyWitness witness;
};

ParsedWitness witness_from_document(const Document& doc);

}  // namespace dalg
