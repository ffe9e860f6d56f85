// test_taxonomy.cpp
// One hand-built complex per class pins the classifier; a differential
// test rebuilds the label from the public component API on a random
// sample.  The ledger's closed forms are frozen here as plain numbers
// worked out independently; the exhaustive sweep confirms them again at
// the count level.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "xray/checker.hpp"
#include "xray/geometry.hpp"
#include "xray/taxonomy.hpp"

using namespace xray;

namespace {

using Pairs = std::array<std::pair<PointId, PointId>, 8>;

Complex make(const Pairs& p) { return Complex::from_point_pairs(p); }

// Rebuild the label from covered_points/components only.
TaxonomyLabel label_via_public_api(const Complex& c) {
  int omitted = 8 - static_cast<int>(covered_points(c).size());
  if (omitted == 1) return TaxonomyLabel::OmitsPoints1;
  if (omitted == 2) return TaxonomyLabel::OmitsPoints2;
  if (omitted >= 3) return TaxonomyLabel::OmitsPoints3;

  auto comps = components(c);
  int iso = 0, t3 = 0, t4 = 0;
  for (const auto& s : comps)
    if (s.kind == ComponentKind::Tree) {
      if (s.vertex_count() == 2) ++iso;
      if (s.vertex_count() == 3) ++t3;
      if (s.vertex_count() == 4) ++t4;
    }
  if (iso) return TaxonomyLabel::TreeIsolatedLine;
  if (t3) return TaxonomyLabel::Tree3Point;
  if (t4) return TaxonomyLabel::Tree4Point;

  std::vector<int> even_lengths;
  for (const auto& s : comps)
    if (s.kind == ComponentKind::UnicyclicEven)
      even_lengths.push_back(*s.cycle_length);
  if (even_lengths.empty()) return TaxonomyLabel::Admissible;
  if (even_lengths.size() == 1 && even_lengths[0] == 8)
    return TaxonomyLabel::Cycle8;
  if (even_lengths.size() == 1 && even_lengths[0] == 6)
    return TaxonomyLabel::Cycle6;
  if (even_lengths.size() == 2) return TaxonomyLabel::TwoFourCycles;
  if (comps.size() > 1) return TaxonomyLabel::UniqueFourCycleDisconnected;

  // Connected with a unique 4-cycle: count cycle vertices of degree > 2.
  SmallGraph g = SmallGraph::from_complex(c);
  std::uint16_t cycle = 0;
  for (const auto& s : comps)
    if (s.kind == ComponentKind::UnicyclicEven) {
      // Strip leaves (test-side copy) to find the cycle vertices.
      std::uint16_t m = s.vertex_mask;
      bool again = true;
      while (again) {
        again = false;
        for (int v = 0; v < 8; ++v)
          if ((m >> v) & 1 &&
              std::popcount(static_cast<std::uint16_t>(g.adjacency(v) & m)) <=
                  1) {
            m &= static_cast<std::uint16_t>(~(1u << v));
            again = true;
          }
      }
      cycle = m;
    }
  int branches = 0;
  for (int v = 0; v < 8; ++v)
    if ((cycle >> v) & 1 && g.degree(v) > 2) ++branches;
  return static_cast<TaxonomyLabel>(
      static_cast<int>(TaxonomyLabel::UniqueFourCycleConnected1) + branches -
      1);
}

}  // namespace

TEST_CASE("label names round-trip") {
  std::set<std::string_view> seen;
  for (TaxonomyLabel l : kAllLabels) {
    auto name = label_name(l);
    CHECK(!name.empty());
    CHECK(seen.insert(name).second);
    CHECK(label_from_name(name) == l);
  }
  CHECK(!label_from_name("NOT_A_LABEL").has_value());
  CHECK(label_from_name("ADMISSIBLE") == TaxonomyLabel::Admissible);
  CHECK(label_from_name("UNIQUE_4CYCLE_CONNECTED_3") ==
        TaxonomyLabel::UniqueFourCycleConnected3);
}

TEST_CASE("one hand-built complex per class") {
  std::vector<std::pair<Pairs, TaxonomyLabel>> cases = {
      {{{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {4, 5}, {5, 6}, {4, 6}, {6, 7}}},
       TaxonomyLabel::Admissible},
      {{{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}, {5, 6}}},
       TaxonomyLabel::OmitsPoints1},
      {{{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}}},
       TaxonomyLabel::OmitsPoints2},
      {{{{1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}},
       TaxonomyLabel::OmitsPoints3},
      {{{{0, 1}, {2, 3}, {3, 4}, {2, 4}, {5, 6}, {6, 7}, {5, 7}, {2, 5}}},
       TaxonomyLabel::TreeIsolatedLine},
      {{{{0, 1}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}}},
       TaxonomyLabel::TreeIsolatedLine},  // two isolated lines plus K4
      {{{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {3, 5}, {3, 6}, {4, 6}, {6, 7}}},
       TaxonomyLabel::Tree3Point},
      {{{{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}}},
       TaxonomyLabel::Tree4Point},
      {{{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}}},
       TaxonomyLabel::Cycle8},
      {{{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {0, 7}}},
       TaxonomyLabel::Cycle6},
      {{{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}}},
       TaxonomyLabel::TwoFourCycles},
      {{{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {4, 6}, {6, 7}}},
       TaxonomyLabel::UniqueFourCycleDisconnected},
      {{{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7}}},
       TaxonomyLabel::UniqueFourCycleConnected1},
      {{{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {3, 5}, {0, 6}, {6, 7}}},
       TaxonomyLabel::UniqueFourCycleConnected2},
      {{{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {0, 5}, {1, 6}, {6, 7}}},
       TaxonomyLabel::UniqueFourCycleConnected3},
      {{{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}},
       TaxonomyLabel::UniqueFourCycleConnected4},
  };
  for (const auto& [pairs, want] : cases) {
    auto c = make(pairs);
    CAPTURE(label_name(want));
    CHECK(classify(c) == want);
    auto an = analyze(c);
    CHECK(an.label == want);
    CHECK(an.structure_ok);
  }
}

TEST_CASE("analysis fields on a disconnected fixture") {
  // Isolated line {0,1} next to two triangles joined through point 2.
  Pairs pairs{{{0, 1}, {2, 3}, {3, 4}, {2, 4}, {5, 6}, {6, 7}, {5, 7}, {2, 5}}};
  auto an = analyze(make(pairs));
  CHECK(an.covered_mask == kAllPointsMask);
  CHECK(an.omitted_count == 0);
  CHECK(an.component_count == 2);
  CHECK(an.isolated_line_count == 1);
  CHECK(an.tree_component_count == 1);
  CHECK(an.bipartite_components == 1);  // just the isolated line

  Pairs two_iso{
      {{0, 1}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}}};
  auto an2 = analyze(make(two_iso));
  CHECK(an2.isolated_line_count == 2);
  CHECK(an2.component_count == 3);
  CHECK(an2.bipartite_components == 2);
}

TEST_CASE("classifier agrees with a rebuild from the public component API") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 5000; ++trial) {
    auto c = unrank_complex(rng() % kComplexCount);
    CAPTURE(rank_complex(c));
    CHECK(classify(c) == label_via_public_api(c));
  }
}

TEST_CASE("formula ledger values are the hand-checked numbers") {
  std::map<std::string, std::int64_t> expected = {
      {"omitted_point_incidences", 1627920},
      {"omitted_pair_incidences", 180180},
      {"omits_three_points", 2520},
      {"omitting_complexes_distinct", 1450260},
      {"complexes_omitting_exactly_two", 172620},
      {"complexes_omitting_exactly_one", 1275120},
      {"isolated_line_incidences", 180180},
      {"two_isolated_lines", 210},
      {"isolated_line_complexes_distinct", 179970},
      {"isolated_line_with_omitted_point", 20160},
      {"covering_with_isolated_line", 159810},
      {"covering_with_isolated_3_point_tree", 34440},
      {"covering_with_isolated_4_point_tree", 6720},
      {"tree_family_total", 200970},
      {"proper_complexes", 1456875},
      {"eight_cycle_complexes", 2520},
      {"six_cycle_complexes", 80640},
      {"two_four_cycle_complexes", 315},
      {"unique_four_cycle_disconnected", 5880},
      {"unique_four_cycle_connected_1", 105000},
      {"unique_four_cycle_connected_2", 229320},
      {"unique_four_cycle_connected_3", 90720},
      {"unique_four_cycle_connected_4", 5040},
      {"even_cycle_total", 519435},
      {"admissible_complexes", 937440},
      {"total_complexes", 3108105},
  };

  auto rows = formula_ledger();
  CHECK(rows.size() == expected.size());
  std::set<std::string> seen;
  for (const auto& row : rows) {
    CAPTURE(row.id);
    CHECK(seen.insert(row.id).second);
    CHECK(!row.expression.empty());
    REQUIRE(expected.count(row.id) == 1);
    CHECK(row.value == expected[row.id]);
  }
}

TEST_CASE("formula ledger is internally consistent") {
  std::map<std::string, std::int64_t> v;
  for (const auto& row : formula_ledger()) v[row.id] = row.value;

  CHECK(v["omitting_complexes_distinct"] ==
        v["complexes_omitting_exactly_one"] +
            v["complexes_omitting_exactly_two"] + v["omits_three_points"]);
  CHECK(v["omitted_point_incidences"] ==
        v["complexes_omitting_exactly_one"] +
            2 * v["complexes_omitting_exactly_two"] +
            3 * v["omits_three_points"]);
  CHECK(v["isolated_line_complexes_distinct"] ==
        v["covering_with_isolated_line"] +
            v["isolated_line_with_omitted_point"]);
  CHECK(v["tree_family_total"] == v["covering_with_isolated_line"] +
                                      v["covering_with_isolated_3_point_tree"] +
                                      v["covering_with_isolated_4_point_tree"]);
  CHECK(v["proper_complexes"] ==
        v["total_complexes"] - v["omitting_complexes_distinct"] -
            v["tree_family_total"]);
  CHECK(v["even_cycle_total"] ==
        v["eight_cycle_complexes"] + v["six_cycle_complexes"] +
            v["two_four_cycle_complexes"] + v["unique_four_cycle_disconnected"] +
            v["unique_four_cycle_connected_1"] +
            v["unique_four_cycle_connected_2"] +
            v["unique_four_cycle_connected_3"] +
            v["unique_four_cycle_connected_4"]);
  CHECK(v["admissible_complexes"] ==
        v["proper_complexes"] - v["even_cycle_total"]);
}
