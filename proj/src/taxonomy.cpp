// taxonomy.cpp
// Labeling walks the component scan once.  The structure_ok flag
// asserts every impossibility the class catalogue relies on (tree
// components bigger than 4 points, a second even cycle next to a
// 6-cycle, more than 3 omitted points, ...); the exhaustive sweep
// checks it never trips.

#include "xray/taxonomy.hpp"

#include <bit>
#include <stdexcept>

#include "xray/checker.hpp"
#include "xray/rational.hpp"

namespace xray {

namespace {

constexpr std::array<std::string_view, kLabelCount> kLabelNames = {
    "ADMISSIBLE",
    "OMITS_POINTS_1",
    "OMITS_POINTS_2",
    "OMITS_POINTS_3",
    "TREE_ISOLATED_LINE",
    "TREE_3POINT",
    "TREE_4POINT",
    "CYCLE_8",
    "CYCLE_6",
    "TWO_4CYCLES",
    "UNIQUE_4CYCLE_DISCONNECTED",
    "UNIQUE_4CYCLE_CONNECTED_1",
    "UNIQUE_4CYCLE_CONNECTED_2",
    "UNIQUE_4CYCLE_CONNECTED_3",
    "UNIQUE_4CYCLE_CONNECTED_4",
};

}  // namespace

std::string_view label_name(TaxonomyLabel l) {
  auto i = static_cast<std::size_t>(l);
  if (i >= kLabelCount) throw std::out_of_range("label_name: bad label");
  return kLabelNames[i];
}

std::optional<TaxonomyLabel> label_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kLabelCount; ++i)
    if (kLabelNames[i] == name) return kAllLabels[i];
  return std::nullopt;
}

namespace detail {

ComplexAnalysis analyze_mask(std::uint32_t line_mask) noexcept {
  std::uint16_t adj[kPointCount];
  std::uint8_t covered = complex_adjacency(line_mask, adj);
  Scan scan;
  scan_graph(kPointCount, adj, covered, scan);

  ComplexAnalysis out;
  out.covered_mask = covered;
  out.omitted_count =
      static_cast<std::uint8_t>(kPointCount - std::popcount(covered));
  out.component_count = static_cast<std::uint8_t>(scan.count);

  int bipartite = out.omitted_count;
  int trees = 0, iso = 0, tree3 = 0, tree4 = 0, tree_large = 0;
  int evens = 0, even4 = 0, even6 = 0, even8 = 0;
  int multicyclic = 0;
  int four_cycle_comp = -1;
  for (int i = 0; i < scan.count; ++i) {
    const auto& e = scan.comp[i];
    int v = std::popcount(e.vertex_mask);
    if (e.bipartite) ++bipartite;
    if (e.edge_count == v - 1) {
      ++trees;
      if (v == 2)
        ++iso;
      else if (v == 3)
        ++tree3;
      else if (v == 4)
        ++tree4;
      else
        ++tree_large;
    } else if (e.edge_count == v) {
      int len = std::popcount(e.cycle_mask);
      if (len % 2 == 0) {
        ++evens;
        if (len == 4) {
          ++even4;
          four_cycle_comp = i;
        } else if (len == 6) {
          ++even6;
        } else {
          ++even8;  // the only remaining even length on 8 points
        }
      }
    } else {
      ++multicyclic;
    }
  }
  out.bipartite_components = static_cast<std::uint8_t>(bipartite);
  out.isolated_line_count = static_cast<std::uint8_t>(iso);
  out.tree_component_count = static_cast<std::uint8_t>(trees);

  bool ok = tree_large == 0;
  TaxonomyLabel label;
  if (out.omitted_count > 0) {
    switch (out.omitted_count) {
      case 1:
        label = TaxonomyLabel::OmitsPoints1;
        break;
      case 2:
        label = TaxonomyLabel::OmitsPoints2;
        break;
      case 3:
        label = TaxonomyLabel::OmitsPoints3;
        break;
      default:
        // 8 lines need at least 5 points (a 4-point set has 6 pairs).
        label = TaxonomyLabel::OmitsPoints3;
        ok = false;
        break;
    }
  } else if (trees > 0) {
    // With all 8 points covered by 8 lines the tree components can only
    // form the multisets {2}, {2,2}, {3}, {4}.
    if (iso > 2 || tree3 > 1 || tree4 > 1 || (iso && (tree3 || tree4)) ||
        (tree3 && tree4))
      ok = false;
    if (iso > 0)
      label = TaxonomyLabel::TreeIsolatedLine;
    else if (tree3 > 0)
      label = TaxonomyLabel::Tree3Point;
    else if (tree4 > 0)
      label = TaxonomyLabel::Tree4Point;
    else {
      label = TaxonomyLabel::TreeIsolatedLine;
      ok = false;
    }
  } else {
    // Proper complex: 8 edges across 8 covered points with no tree
    // component leaves every component with edges == vertices.
    if (multicyclic > 0) ok = false;
    if (evens == 0) {
      label = TaxonomyLabel::Admissible;
    } else if (even8 > 0) {
      label = TaxonomyLabel::Cycle8;
      if (scan.count != 1 || evens != 1) ok = false;
    } else if (even6 > 0) {
      // The two leftover points hang off the cycle, so the complex is
      // connected.
      label = TaxonomyLabel::Cycle6;
      if (scan.count != 1 || evens != 1) ok = false;
    } else if (even4 == 2) {
      label = TaxonomyLabel::TwoFourCycles;
      if (scan.count != 2) ok = false;
    } else if (even4 == 1) {
      if (scan.count > 1) {
        label = TaxonomyLabel::UniqueFourCycleDisconnected;
      } else {
        // Cycle vertices that carry attached trees.
        int branches = 0;
        std::uint16_t cm = scan.comp[four_cycle_comp].cycle_mask;
        while (cm) {
          int v = std::countr_zero(cm);
          cm &= static_cast<std::uint16_t>(cm - 1);
          if (std::popcount(adj[v]) > 2) ++branches;
        }
        if (branches < 1 || branches > 4) {
          branches = 1;
          ok = false;
        }
        label = static_cast<TaxonomyLabel>(
            static_cast<int>(TaxonomyLabel::UniqueFourCycleConnected1) +
            branches - 1);
      }
    } else {
      // Three or more 4-cycles cannot fit in 8 points.
      label = TaxonomyLabel::TwoFourCycles;
      ok = false;
    }
  }
  out.label = label;
  out.structure_ok = ok;
  return out;
}

}  // namespace detail

ComplexAnalysis analyze(const Complex& c) {
  return detail::analyze_mask(c.mask());
}

TaxonomyLabel classify(const Complex& c) {
  return detail::analyze_mask(c.mask()).label;
}

namespace {

std::int64_t C(int n, int k) {
  return static_cast<std::int64_t>(binomial(n, k));
}

std::string num(std::int64_t v) { return std::to_string(v); }

// Forests of 4 labeled extra vertices attached to exactly j of the 4
// cycle vertices.  Forests attached to at most i fixed roots number
// i*(i+4)^3 (Cayley), and inclusion-exclusion isolates "exactly j".
std::int64_t attachments_with_branches(int j) {
  std::int64_t sum = 0;
  for (int i = 0; i <= j; ++i) {
    std::int64_t ways = i == 0 ? 0 : i * (i + 4) * (i + 4) * (i + 4);
    std::int64_t term = C(j, i) * ways;
    sum += ((j - i) % 2 == 0) ? term : -term;
  }
  return C(4, j) * sum;
}

}  // namespace

std::vector<FormulaResult> formula_ledger() {
  std::vector<FormulaResult> rows;
  auto add = [&rows](std::string id, std::string expr, std::int64_t value) {
    rows.push_back({std::move(id), std::move(expr), value});
  };

  // Complexes that miss a point.  Incidences count (complex, omitted
  // point) pairs; inclusion-exclusion turns them into distinct counts.
  const std::int64_t omit_inc = 8 * C(21, 8);
  add("omitted_point_incidences", "8 * C(21,8)", omit_inc);
  const std::int64_t omit_pairs = C(8, 2) * C(15, 8);
  add("omitted_pair_incidences", "C(8,2) * C(15,8)", omit_pairs);
  const std::int64_t omit3 = C(8, 3) * C(10, 8);
  add("omits_three_points", "C(8,3) * C(10,8)", omit3);
  const std::int64_t omit_distinct = omit_inc - omit_pairs + omit3;
  add("omitting_complexes_distinct",
      "8*C(21,8) - C(8,2)*C(15,8) + C(8,3)*C(10,8)", omit_distinct);
  const std::int64_t omit2 = omit_pairs - 3 * omit3;
  add("complexes_omitting_exactly_two",
      "C(8,2)*C(15,8) - C(3,2) * " + num(omit3), omit2);
  const std::int64_t omit1 = omit_inc - 2 * omit2 - 3 * omit3;
  add("complexes_omitting_exactly_one",
      num(omit_inc) + " - 2*" + num(omit2) + " - 3*" + num(omit3), omit1);

  // Covering complexes with an isolated line.
  const std::int64_t iso_inc = 28 * C(15, 7);
  add("isolated_line_incidences", "28 * C(15,7)", iso_inc);
  const std::int64_t iso_two = 28 * 15 / 2;
  add("two_isolated_lines", "28 * 15 / 2", iso_two);
  add("isolated_line_complexes_distinct", "28*C(15,7) - " + num(iso_two),
      iso_inc - iso_two);
  const std::int64_t iso_omit = 28 * 6 * C(10, 7);
  add("isolated_line_with_omitted_point", "28 * 6 * C(10,7)", iso_omit);
  // The per-line bracket has a half-integer correction (each doubly
  // isolated complex is shared by two lines), so evaluate it exactly
  // over the rationals and insist the total comes out integral.
  Rational bracket = Rational(C(15, 7)) - Rational(6 * C(10, 7)) -
                     Rational(15, 2);
  Rational covering_iso_r = Rational(28) * bracket;
  if (!covering_iso_r.is_integer())
    throw std::logic_error("formula_ledger: bracket total is not integral");
  const std::int64_t covering_iso = covering_iso_r.num();
  add("covering_with_isolated_line", "28 * (C(15,7) - 6*C(10,7) - 15/2)",
      covering_iso);

  // Covering complexes with a 3- or 4-point tree component.
  const std::int64_t tree3 = C(8, 3) * 3 * (C(10, 6) - 5);
  add("covering_with_isolated_3_point_tree", "C(8,3) * 3 * (C(10,6) - 5)",
      tree3);
  const std::int64_t tree4 = C(8, 4) * 16 * C(6, 5);
  add("covering_with_isolated_4_point_tree", "C(8,4) * 4^2 * C(6,5)", tree4);
  const std::int64_t tree_total = covering_iso + tree3 + tree4;
  add("tree_family_total",
      num(covering_iso) + " + " + num(tree3) + " + " + num(tree4), tree_total);

  const std::int64_t total = C(28, 8);
  const std::int64_t proper = total - omit_distinct - tree_total;
  add("proper_complexes",
      "C(28,8) - " + num(omit_distinct) + " - " + num(tree_total), proper);

  // Even-cycle classes of proper complexes.
  const std::int64_t cyc8 = 5040 / 2;  // 7!/2 labeled 8-cycles
  add("eight_cycle_complexes", "7! / 2", cyc8);
  const std::int64_t cyc6 = C(8, 6) * (120 / 2) * 48;
  add("six_cycle_complexes", "C(8,6) * 5!/2 * (6*6 + 2*6)", cyc6);
  const std::int64_t two4 = C(8, 4) * 3 * 3 / 2;
  add("two_four_cycle_complexes", "C(8,4) * 3 * 3 / 2", two4);
  const std::int64_t u4_disc = C(8, 4) * 3 * (C(4, 3) * 3) +
                               C(8, 5) * (C(5, 4) * 3 * 4) * 1;
  add("unique_four_cycle_disconnected",
      "C(8,4)*3 * C(4,3)*3  +  C(8,5) * C(5,4)*3*4", u4_disc);

  std::int64_t u4_conn_total = 0;
  std::array<std::int64_t, 4> u4_conn{};
  for (int j = 1; j <= 4; ++j) {
    std::int64_t att = attachments_with_branches(j);
    u4_conn[j - 1] = C(8, 4) * 3 * att;
    u4_conn_total += u4_conn[j - 1];
    add("unique_four_cycle_connected_" + std::to_string(j),
        "C(8,4) * 3 * " + num(att), u4_conn[j - 1]);
  }

  const std::int64_t even_total =
      cyc8 + cyc6 + two4 + u4_disc + u4_conn_total;
  add("even_cycle_total",
      num(cyc8) + " + " + num(cyc6) + " + " + num(two4) + " + " +
          num(u4_disc) + " + " + num(u4_conn_total),
      even_total);

  const std::int64_t admissible = proper - even_total;
  add("admissible_complexes",
      num(proper) + " - " + num(even_total), admissible);
  add("total_complexes", "C(28,8)", total);
  return rows;
}

}  // namespace xray
