// enumerator.cpp
// The sweep walks masks with the Gosper successor, starting from the
// unranked partition head.  Per-partition ledgers are pure functions of
// the range, so merging in a fixed order keeps every run (and every
// thread count) byte-identical.

#include "xray/enumerator.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "xray/linalg.hpp"

namespace xray {

CountLedger sweep(SweepPartition p, SweepMode mode) {
  if (p.begin_rank > p.end_rank || p.end_rank > kComplexCount)
    throw std::out_of_range("sweep: bad partition");

  CountLedger led;
  if (p.begin_rank == p.end_rank) return led;

  std::uint32_t mask = detail::unrank_mask(p.begin_rank);
  for (std::uint64_t r = p.begin_rank; r < p.end_rank;
       ++r, mask = next_complex_mask(mask)) {
    ComplexAnalysis an = detail::analyze_mask(mask);
    ++led.per_label[static_cast<std::size_t>(an.label)];
    if (!an.structure_ok) ++led.structure_violations;

    led.stats.omitted_point_incidences += an.omitted_count;
    led.stats.omitted_pair_incidences +=
        static_cast<std::uint64_t>(an.omitted_count) *
        (an.omitted_count - 1) / 2;
    led.stats.isolated_line_incidences += an.isolated_line_count;
    if (an.isolated_line_count >= 1) {
      ++led.stats.complexes_with_isolated_line;
      if (an.isolated_line_count >= 2)
        ++led.stats.complexes_with_two_isolated_lines;
      if (an.omitted_count >= 1) {
        ++led.stats.isolated_line_and_omitted_point;
        if (an.omitted_count >= 2) ++led.stats.isolated_line_and_two_omitted;
        if (an.isolated_line_count >= 2)
          ++led.stats.two_isolated_lines_and_omitted;
      }
    }

    if (mode == SweepMode::Full) {
      detail::ElimResult er = detail::eliminate_incidence8(mask);
      bool graph_admissible = an.bipartite_components == 0;
      if ((er.det != 0) != graph_admissible) ++led.oracle_disagreements;
      if (er.rank != kPointCount - an.bipartite_components)
        ++led.rank_identity_violations;
      if (graph_admissible &&
          std::llabs(er.det) != (std::int64_t{1} << an.component_count))
        ++led.det_power_violations;
    }
  }
  led.total = p.end_rank - p.begin_rank;
  led.admissible = led.count(TaxonomyLabel::Admissible);
  return led;
}

CountLedger merge(const CountLedger& a, const CountLedger& b) {
  CountLedger out = a;
  for (std::size_t i = 0; i < out.per_label.size(); ++i)
    out.per_label[i] += b.per_label[i];
  out.total += b.total;
  out.admissible += b.admissible;
  out.oracle_disagreements += b.oracle_disagreements;
  out.rank_identity_violations += b.rank_identity_violations;
  out.det_power_violations += b.det_power_violations;
  out.structure_violations += b.structure_violations;
  out.stats.omitted_point_incidences += b.stats.omitted_point_incidences;
  out.stats.omitted_pair_incidences += b.stats.omitted_pair_incidences;
  out.stats.isolated_line_incidences += b.stats.isolated_line_incidences;
  out.stats.complexes_with_isolated_line +=
      b.stats.complexes_with_isolated_line;
  out.stats.complexes_with_two_isolated_lines +=
      b.stats.complexes_with_two_isolated_lines;
  out.stats.isolated_line_and_omitted_point +=
      b.stats.isolated_line_and_omitted_point;
  out.stats.isolated_line_and_two_omitted +=
      b.stats.isolated_line_and_two_omitted;
  out.stats.two_isolated_lines_and_omitted +=
      b.stats.two_isolated_lines_and_omitted;
  return out;
}

std::vector<SweepPartition> partition_ranks(std::uint64_t total, int parts) {
  if (parts < 1) throw std::invalid_argument("partition_ranks: parts < 1");
  std::vector<SweepPartition> out;
  out.reserve(parts);
  std::uint64_t base = total / parts;
  std::uint64_t extra = total % parts;
  std::uint64_t at = 0;
  for (int i = 0; i < parts; ++i) {
    std::uint64_t len = base + (static_cast<std::uint64_t>(i) < extra);
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

CountLedger full_sweep(SweepMode mode, int jobs) {
  if (jobs < 1) throw std::invalid_argument("full_sweep: jobs < 1");
  if (jobs == 1) return sweep({0, kComplexCount}, mode);

  auto parts = partition_ranks(kComplexCount, jobs);
  std::vector<CountLedger> ledgers(parts.size());
  std::vector<std::thread> workers;
  workers.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    workers.emplace_back(
        [&ledgers, &parts, mode, i] { ledgers[i] = sweep(parts[i], mode); });
  for (auto& w : workers) w.join();

  CountLedger out;
  for (const auto& led : ledgers) out = merge(out, led);
  return out;
}

std::uint64_t count_admissible(int jobs) {
  return full_sweep(SweepMode::Full, jobs).admissible;
}

namespace {

void check(std::vector<LemmaCheck>& out, std::string id, std::string expr,
           std::uint64_t expected, std::uint64_t observed) {
  out.push_back({std::move(id), std::move(expr), expected, observed,
                 expected == observed});
}

}  // namespace

std::vector<LemmaCheck> verify_lemmas(const CountLedger& led) {
  std::vector<LemmaCheck> out;

  // Closed forms first.  Rows whose id matches a label name compare
  // against that label's sweep count; the rest map onto the
  // multiplicity counters.
  std::uint64_t omit_labels = 0, tree_labels = 0, even_labels = 0;
  for (TaxonomyLabel l :
       {TaxonomyLabel::OmitsPoints1, TaxonomyLabel::OmitsPoints2,
        TaxonomyLabel::OmitsPoints3})
    omit_labels += led.count(l);
  for (TaxonomyLabel l :
       {TaxonomyLabel::TreeIsolatedLine, TaxonomyLabel::Tree3Point,
        TaxonomyLabel::Tree4Point})
    tree_labels += led.count(l);
  for (TaxonomyLabel l :
       {TaxonomyLabel::Cycle8, TaxonomyLabel::Cycle6,
        TaxonomyLabel::TwoFourCycles,
        TaxonomyLabel::UniqueFourCycleDisconnected,
        TaxonomyLabel::UniqueFourCycleConnected1,
        TaxonomyLabel::UniqueFourCycleConnected2,
        TaxonomyLabel::UniqueFourCycleConnected3,
        TaxonomyLabel::UniqueFourCycleConnected4})
    even_labels += led.count(l);

  for (const FormulaResult& row : formula_ledger()) {
    std::uint64_t observed;
    if (row.id == "omitted_point_incidences")
      observed = led.stats.omitted_point_incidences;
    else if (row.id == "omitted_pair_incidences")
      observed = led.stats.omitted_pair_incidences;
    else if (row.id == "omits_three_points")
      observed = led.count(TaxonomyLabel::OmitsPoints3);
    else if (row.id == "omitting_complexes_distinct")
      observed = omit_labels;
    else if (row.id == "complexes_omitting_exactly_two")
      observed = led.count(TaxonomyLabel::OmitsPoints2);
    else if (row.id == "complexes_omitting_exactly_one")
      observed = led.count(TaxonomyLabel::OmitsPoints1);
    else if (row.id == "isolated_line_incidences")
      observed = led.stats.isolated_line_incidences;
    else if (row.id == "two_isolated_lines")
      observed = led.stats.complexes_with_two_isolated_lines;
    else if (row.id == "isolated_line_complexes_distinct")
      observed = led.stats.complexes_with_isolated_line;
    else if (row.id == "isolated_line_with_omitted_point")
      observed = led.stats.isolated_line_and_omitted_point;
    else if (row.id == "covering_with_isolated_line")
      observed = led.count(TaxonomyLabel::TreeIsolatedLine);
    else if (row.id == "covering_with_isolated_3_point_tree")
      observed = led.count(TaxonomyLabel::Tree3Point);
    else if (row.id == "covering_with_isolated_4_point_tree")
      observed = led.count(TaxonomyLabel::Tree4Point);
    else if (row.id == "tree_family_total")
      observed = tree_labels;
    else if (row.id == "proper_complexes")
      observed = led.total - omit_labels - tree_labels;
    else if (row.id == "eight_cycle_complexes")
      observed = led.count(TaxonomyLabel::Cycle8);
    else if (row.id == "six_cycle_complexes")
      observed = led.count(TaxonomyLabel::Cycle6);
    else if (row.id == "two_four_cycle_complexes")
      observed = led.count(TaxonomyLabel::TwoFourCycles);
    else if (row.id == "unique_four_cycle_disconnected")
      observed = led.count(TaxonomyLabel::UniqueFourCycleDisconnected);
    else if (row.id == "unique_four_cycle_connected_1")
      observed = led.count(TaxonomyLabel::UniqueFourCycleConnected1);
    else if (row.id == "unique_four_cycle_connected_2")
      observed = led.count(TaxonomyLabel::UniqueFourCycleConnected2);
    else if (row.id == "unique_four_cycle_connected_3")
      observed = led.count(TaxonomyLabel::UniqueFourCycleConnected3);
    else if (row.id == "unique_four_cycle_connected_4")
      observed = led.count(TaxonomyLabel::UniqueFourCycleConnected4);
    else if (row.id == "even_cycle_total")
      observed = even_labels;
    else if (row.id == "admissible_complexes")
      observed = led.count(TaxonomyLabel::Admissible);
    else if (row.id == "total_complexes")
      observed = led.total;
    else
      continue;  // a formula row with no sweep counterpart
    check(out, row.id, row.expression,
          static_cast<std::uint64_t>(row.value), observed);
  }

  // Counters that must come back empty.
  check(out, "oracle_disagreements", "graph and rank oracles always agree", 0,
        led.oracle_disagreements);
  check(out, "rank_identity_violations",
        "rank defect equals bipartite component count", 0,
        led.rank_identity_violations);
  check(out, "det_power_violations",
        "admissible determinants are +-2^components", 0,
        led.det_power_violations);
  check(out, "structure_violations", "class catalogue fits every complex", 0,
        led.structure_violations);
  check(out, "isolated_line_and_two_omitted",
        "no complex pairs an isolated line with two omitted points", 0,
        led.stats.isolated_line_and_two_omitted);
  check(out, "two_isolated_lines_and_omitted",
        "no complex pairs two isolated lines with an omitted point", 0,
        led.stats.two_isolated_lines_and_omitted);

  // Bookkeeping identities.
  std::uint64_t label_sum = 0;
  for (std::uint64_t n : led.per_label) label_sum += n;
  check(out, "labels_partition_everything", "label counts sum to the total",
        led.total, label_sum);
  check(out, "admissible_field_consistent",
        "ledger.admissible equals the ADMISSIBLE label count",
        led.count(TaxonomyLabel::Admissible), led.admissible);
  return out;
}

}  // namespace xray
