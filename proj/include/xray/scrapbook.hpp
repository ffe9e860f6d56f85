#pragma once
// scrapbook.hpp
// Gallery builder: the lowest-rank specimens of each class, exported as
// Graphviz, TikZ, and a line-per-fact text format that parses back.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xray/geometry.hpp"
#include "xray/taxonomy.hpp"

namespace xray {

struct ScrapbookEntry {
  TaxonomyLabel label;
  Complex complex;
  // Point coordinates for the drawing; the default is two rows of four.
  std::optional<std::array<std::pair<double, double>, kPointCount>>
      layout_hint;
  std::string caption;
};

class InsufficientPopulationError : public std::runtime_error {
 public:
  InsufficientPopulationError(TaxonomyLabel label, std::uint64_t population,
                              int requested);
  TaxonomyLabel label() const { return label_; }
  std::uint64_t population() const { return population_; }

 private:
  TaxonomyLabel label_;
  std::uint64_t population_;
};

// The k lowest-rank complexes carrying the label, in rank order.
// Throws InsufficientPopulationError (carrying the true population)
// when the class has fewer than k members.
std::vector<ScrapbookEntry> representatives(TaxonomyLabel label, int k);

// Graphviz `graph complex_<rank> { ... }` with all 8 points declared,
// edges in ascending line order, label and caption as comments.
std::string export_dot(const ScrapbookEntry& e);

// Self-contained tikzpicture, same ordering conventions.
std::string export_tikz(const ScrapbookEntry& e);

// Plain text: "points: 8", one "line: a b" per line ascending, then
// "label: <name>".
std::string export_cplx(const ScrapbookEntry& e);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }  // 1-based

 private:
  int line_;
};

// Inverse of export_cplx (caption and layout are not serialized).
ScrapbookEntry parse_cplx(const std::string& text);

struct ScrapbookIndexRow {
  TaxonomyLabel label;
  std::uint64_t population = 0;
  int emitted = 0;
};

// Writes <label>/<rank>.{dot,tex,cplx} for up to k_per_label specimens
// of every class, plus an index.tsv, into dir.  One enumeration pass
// feeds all classes; reruns produce byte-identical files.  Returns the
// index rows in the order written (label name order).
std::vector<ScrapbookIndexRow> build_scrapbook(
    const std::filesystem::path& dir, int k_per_label);

}  // namespace xray
