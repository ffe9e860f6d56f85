#pragma once
// taxonomy.hpp
// Every complex falls in exactly one of 15 classes.  Precedence:
// omitted points first, then isolated subtree components, then
// admissible, then the even-cycle classes that make the remaining
// (proper, all-unicyclic) complexes inadmissible.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xray/geometry.hpp"

namespace xray {

enum class TaxonomyLabel : std::uint8_t {
  Admissible = 0,
  OmitsPoints1,
  OmitsPoints2,
  OmitsPoints3,
  TreeIsolatedLine,  // some component is a single line (2-point tree)
  Tree3Point,        // a 3-point path component
  Tree4Point,        // a 4-point tree component
  Cycle8,            // the complex is one 8-cycle
  Cycle6,            // a 6-cycle component (always spans the complex)
  TwoFourCycles,     // two disjoint bare 4-cycles
  UniqueFourCycleDisconnected,
  UniqueFourCycleConnected1,  // suffix = cycle vertices of degree > 2
  UniqueFourCycleConnected2,
  UniqueFourCycleConnected3,
  UniqueFourCycleConnected4,
};

inline constexpr int kLabelCount = 15;

inline constexpr std::array<TaxonomyLabel, kLabelCount> kAllLabels = {
    TaxonomyLabel::Admissible,
    TaxonomyLabel::OmitsPoints1,
    TaxonomyLabel::OmitsPoints2,
    TaxonomyLabel::OmitsPoints3,
    TaxonomyLabel::TreeIsolatedLine,
    TaxonomyLabel::Tree3Point,
    TaxonomyLabel::Tree4Point,
    TaxonomyLabel::Cycle8,
    TaxonomyLabel::Cycle6,
    TaxonomyLabel::TwoFourCycles,
    TaxonomyLabel::UniqueFourCycleDisconnected,
    TaxonomyLabel::UniqueFourCycleConnected1,
    TaxonomyLabel::UniqueFourCycleConnected2,
    TaxonomyLabel::UniqueFourCycleConnected3,
    TaxonomyLabel::UniqueFourCycleConnected4,
};

// Stable ASCII names, e.g. "ADMISSIBLE", "UNIQUE_4CYCLE_CONNECTED_2".
std::string_view label_name(TaxonomyLabel l);
std::optional<TaxonomyLabel> label_from_name(std::string_view name);

struct ComplexAnalysis {
  TaxonomyLabel label = TaxonomyLabel::Admissible;
  std::uint8_t covered_mask = 0;
  std::uint8_t omitted_count = 0;
  std::uint8_t component_count = 0;       // covered points only
  std::uint8_t bipartite_components = 0;  // omitted singletons included
  std::uint8_t isolated_line_count = 0;
  std::uint8_t tree_component_count = 0;
  // True when the complex fits the structural constraints the class
  // catalogue predicts (e.g. no tree component on 5+ points, no second
  // even cycle next to a 6-cycle).  The sweep proves this holds for
  // every complex; a false here would falsify the catalogue.
  bool structure_ok = true;
};

ComplexAnalysis analyze(const Complex& c);
TaxonomyLabel classify(const Complex& c);

// One closed-form counting identity, evaluated exactly.
struct FormulaResult {
  std::string id;          // stable snake_case key
  std::string expression;  // human-readable arithmetic
  std::int64_t value;
};

// All closed-form counts the sweep can be checked against, in a fixed
// presentation order.
std::vector<FormulaResult> formula_ledger();

namespace detail {

// Allocation-free analysis used by the sweep.
ComplexAnalysis analyze_mask(std::uint32_t line_mask) noexcept;

}  // namespace detail

}  // namespace xray
