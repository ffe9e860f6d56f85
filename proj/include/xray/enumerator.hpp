#pragma once
// enumerator.hpp
// Exhaustive sweep over all 3,108,105 complexes in colex order.  Work
// splits into contiguous rank ranges whose ledgers merge associatively,
// so any partitioning (and any thread count) reproduces the exact same
// totals.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "xray/geometry.hpp"
#include "xray/taxonomy.hpp"

namespace xray {

enum class SweepMode {
  Full,       // classification plus the algebraic cross-checks
  GraphOnly,  // classification only; roughly twice as fast
};

// Half-open rank range.
struct SweepPartition {
  std::uint64_t begin_rank = 0;
  std::uint64_t end_rank = 0;
};

// Multiplicity-weighted counters the closed-form identities refer to.
struct SweepStats {
  std::uint64_t omitted_point_incidences = 0;  // sum of omitted counts
  std::uint64_t omitted_pair_incidences = 0;   // sum of C(omitted, 2)
  std::uint64_t isolated_line_incidences = 0;  // sum of isolated-line counts
  std::uint64_t complexes_with_isolated_line = 0;
  std::uint64_t complexes_with_two_isolated_lines = 0;
  std::uint64_t isolated_line_and_omitted_point = 0;
  std::uint64_t isolated_line_and_two_omitted = 0;  // provably empty
  std::uint64_t two_isolated_lines_and_omitted = 0;  // provably empty
  friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

struct CountLedger {
  std::array<std::uint64_t, kLabelCount> per_label{};
  std::uint64_t total = 0;
  std::uint64_t admissible = 0;
  // Complexes where the graph and rank oracles disagree, the rank
  // defect mismatches the bipartite component count, an admissible
  // determinant is not +-2^components, or the structural catalogue is
  // violated.  All four stay zero on a full sweep.
  std::uint64_t oracle_disagreements = 0;
  std::uint64_t rank_identity_violations = 0;
  std::uint64_t det_power_violations = 0;
  std::uint64_t structure_violations = 0;
  SweepStats stats;

  std::uint64_t count(TaxonomyLabel l) const {
    return per_label[static_cast<std::size_t>(l)];
  }
  friend bool operator==(const CountLedger&, const CountLedger&) = default;
};

// Sweeps one rank range.  Throws std::out_of_range unless
// begin <= end <= kComplexCount.
CountLedger sweep(SweepPartition p, SweepMode mode);

// Componentwise sum; the ledgers should come from disjoint ranges.
CountLedger merge(const CountLedger& a, const CountLedger& b);

// Contiguous, disjoint, exhaustive split of [0, total) into `parts`
// ranges with sizes differing by at most one.
std::vector<SweepPartition> partition_ranks(std::uint64_t total, int parts);

// Sweep everything on `jobs` threads.  The result is independent of
// `jobs`; throws std::invalid_argument for jobs < 1.
CountLedger full_sweep(SweepMode mode, int jobs = 1);

std::uint64_t count_admissible(int jobs = 1);

// One verified identity: a closed-form count against its sweep value.
struct LemmaCheck {
  std::string id;
  std::string expression;
  std::uint64_t expected = 0;
  std::uint64_t observed = 0;
  bool pass = false;
};

// Checks every closed-form identity and every always-zero counter
// against a full-sweep ledger.
std::vector<LemmaCheck> verify_lemmas(const CountLedger& ledger);

}  // namespace xray
