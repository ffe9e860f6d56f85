// cli.cpp
// Every command builds a JSON document (or a row table) and serializes
// it in the requested format.  Nothing here prints wall-clock data, so
// repeated runs with the same inputs are byte-identical.

#include "xray/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xray/checker.hpp"
#include "xray/enumerator.hpp"
#include "xray/rng.hpp"
#include "xray/scrapbook.hpp"
#include "xray/taxonomy.hpp"
#include "xray/transform.hpp"

namespace xray {

namespace {

using nlohmann::json;

char separator(OutputFormat f) { return f == OutputFormat::Csv ? ',' : '\t'; }

std::string field(const std::string& s, OutputFormat f) {
  if (f == OutputFormat::Tsv || s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string scalar(const json& v, OutputFormat f) {
  return v.is_string() ? field(v.get<std::string>(), f) : v.dump();
}

// Key-value document: JSON object, or flattened two-column rows.
void write_object(std::ostream& out, OutputFormat f, const json& doc) {
  if (f == OutputFormat::Json) {
    out << doc.dump(2) << "\n";
    return;
  }
  char sep = separator(f);
  out << "key" << sep << "value\n";
  const json flat = doc.flatten();
  for (const auto& [ptr, v] : flat.items()) {
    std::string key = ptr.substr(1);
    std::replace(key.begin(), key.end(), '/', '.');
    out << field(key, f) << sep << scalar(v, f) << "\n";
  }
}

// Uniform row table: JSON array of objects, or delimited rows in the
// given column order.
void write_table(std::ostream& out, OutputFormat f,
                 const std::vector<std::string>& columns,
                 const std::vector<json>& rows) {
  if (f == OutputFormat::Json) {
    out << json(rows).dump(2) << "\n";
    return;
  }
  char sep = separator(f);
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << (i ? std::string(1, sep) : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i)
      out << (i ? std::string(1, sep) : "") << scalar(row.at(columns[i]), f);
    out << "\n";
  }
}

json ledger_document(const CountLedger& ledger, SweepMode mode) {
  json labels;
  for (TaxonomyLabel l : kAllLabels)
    labels[std::string(label_name(l))] = ledger.count(l);
  const SweepStats& s = ledger.stats;
  return json{
      {"admissible", ledger.admissible},
      {"labels", labels},
      {"mode", mode == SweepMode::Full ? "full" : "graph-only"},
      {"stats",
       {{"omitted_point_incidences", s.omitted_point_incidences},
        {"omitted_pair_incidences", s.omitted_pair_incidences},
        {"isolated_line_incidences", s.isolated_line_incidences},
        {"complexes_with_isolated_line", s.complexes_with_isolated_line},
        {"complexes_with_two_isolated_lines",
         s.complexes_with_two_isolated_lines},
        {"isolated_line_and_omitted_point",
         s.isolated_line_and_omitted_point},
        {"isolated_line_and_two_omitted", s.isolated_line_and_two_omitted},
        {"two_isolated_lines_and_omitted",
         s.two_isolated_lines_and_omitted}}},
      {"total", ledger.total},
      {"violations",
       {{"dual_oracle", ledger.oracle_disagreements},
        {"rank_identity", ledger.rank_identity_violations},
        {"det_power", ledger.det_power_violations},
        {"structure", ledger.structure_violations}}},
  };
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  SweepMode mode = cfg.fast ? SweepMode::GraphOnly : SweepMode::Full;
  write_object(out, cfg.format, ledger_document(full_sweep(mode, cfg.jobs),
                                                mode));
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto checks = verify_lemmas(full_sweep(SweepMode::Full, cfg.jobs));
  std::vector<json> rows;
  int failed = 0;
  for (const auto& c : checks) {
    rows.push_back(json{{"id", c.id},
                        {"expression", c.expression},
                        {"expected", c.expected},
                        {"observed", c.observed},
                        {"pass", c.pass}});
    failed += c.pass ? 0 : 1;
  }
  write_table(out, cfg.format,
              {"id", "expression", "expected", "observed", "pass"}, rows);
  if (failed) {
    err << failed << " of " << checks.size() << " checks failed\n";
    return 1;
  }
  return 0;
}

std::string_view kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Tree: return "tree";
    case ComponentKind::UnicyclicOdd: return "unicyclic-odd";
    case ComponentKind::UnicyclicEven: return "unicyclic-even";
    case ComponentKind::Multicyclic: return "multicyclic";
  }
  return "?";
}

// "0 1, 1 2, ..." -> point pairs.  Throws std::invalid_argument.
std::vector<std::pair<PointId, PointId>> parse_inline(
    const std::string& text) {
  std::vector<std::pair<PointId, PointId>> pairs;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::istringstream ps(piece);
    int a = -1, b = -1;
    std::string rest;
    ps >> a >> b;
    if (!ps || (ps >> rest))
      throw std::invalid_argument("bad pair '" + piece + "'");
    if (a < 0 || a >= kPointCount || b < 0 || b >= kPointCount)
      throw std::invalid_argument("point out of range in '" + piece + "'");
    pairs.push_back({static_cast<PointId>(a), static_cast<PointId>(b)});
  }
  return pairs;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Complex c = Complex::from_mask(0xFF);
  json doc;
  if (!cfg.input_path.empty()) {
    std::ifstream f(cfg.input_path, std::ios::binary);
    if (!f) {
      err << "classify: cannot read '" << cfg.input_path << "'\n";
      return 1;
    }
    std::ostringstream text;
    text << f.rdbuf();
    auto entry = parse_cplx(text.str());
    c = entry.complex;
    doc["recorded_label"] = label_name(entry.label);
    doc["recorded_label_matches"] = classify(c) == entry.label;
  } else if (!cfg.inline_lines.empty()) {
    c = Complex::from_point_pairs(parse_inline(cfg.inline_lines));
  } else {
    err << "classify: provide --input or --lines\n";
    return 2;
  }

  auto analysis = analyze(c);
  doc["label"] = label_name(analysis.label);
  doc["admissible"] = analysis.label == TaxonomyLabel::Admissible;
  doc["mask"] = c.mask();
  doc["rank"] = rank_complex(c);
  json lines = json::array();
  for (LineId l : c.lines()) {
    auto [a, b] = line_endpoints(l);
    lines.push_back(json::array({a, b}));
  }
  doc["lines"] = lines;
  json omitted = json::array();
  for (int p = 0; p < kPointCount; ++p)
    if (!((analysis.covered_mask >> p) & 1)) omitted.push_back(p);
  doc["omitted_points"] = omitted;
  doc["component_count"] = analysis.component_count;
  doc["bipartite_components"] = analysis.bipartite_components;
  doc["isolated_lines"] = analysis.isolated_line_count;
  doc["tree_components"] = analysis.tree_component_count;
  json comps = json::array();
  for (const auto& comp : components(c)) {
    json one{{"vertices", comp.vertices()},
             {"edges", comp.edge_count},
             {"kind", kind_name(comp.kind)},
             {"bipartite", comp.bipartite}};
    if (comp.cycle_length) one["cycle_length"] = *comp.cycle_length;
    comps.push_back(one);
  }
  doc["components"] = comps;
  write_object(out, cfg.format, doc);
  return 0;
}

int cmd_scrapbook(const RunConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  auto rows = build_scrapbook(cfg.output_dir, cfg.per_label);
  std::vector<json> table;
  for (const auto& r : rows)
    table.push_back(json{{"label", label_name(r.label)},
                         {"population", r.population},
                         {"emitted", r.emitted}});
  write_table(out, cfg.format, {"label", "population", "emitted"}, table);
  err << "scrapbook written to '" << cfg.output_dir << "'\n";
  return 0;
}

int cmd_recon(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Rng rng(cfg.seed);
  const auto trials = static_cast<std::uint64_t>(cfg.trials);
  std::uint64_t roundtrips = 0, kernels = 0, samples = 0, failures = 0;

  while (roundtrips < trials || kernels < trials) {
    ++samples;
    Complex c = random_complex(rng);
    auto analysis = analyze(c);
    bool admissible = analysis.label == TaxonomyLabel::Admissible;
    if (admissible && roundtrips < trials) {
      PointFunction f;
      for (auto& v : f)
        v = Rational(rng.next_int(-100, 100), rng.next_int(1, 10));
      if (reconstruct(xray_forward(f, c)) != f) ++failures;
      ++roundtrips;
    } else if (!admissible && kernels < trials) {
      auto basis = kernel_basis(c);
      bool ok =
          basis.size() == static_cast<std::size_t>(analysis.bipartite_components);
      for (const auto& v : basis) {
        for (const auto& entry : v) ok = ok && entry.is_integer();
        for (const auto& sum : xray_forward(v, c).sums)
          ok = ok && sum.is_zero();
      }
      if (!ok) ++failures;
      ++kernels;
    }
  }

  // Fixed fixture: the 8-cycle's kernel is the alternating sign vector.
  const std::pair<PointId, PointId> ring[] = {{0, 1}, {1, 2}, {2, 3},
                                              {3, 4}, {4, 5}, {5, 6},
                                              {6, 7}, {0, 7}};
  auto ring_basis = kernel_basis(Complex::from_point_pairs(ring));
  bool ring_ok = ring_basis.size() == 1;
  for (int i = 0; ring_ok && i < kPointCount; ++i)
    ring_ok = ring_basis[0][i] == Rational(i % 2 ? -1 : 1);
  if (!ring_ok) ++failures;

  write_object(out, cfg.format,
               json{{"eight_cycle_alternating", ring_ok},
                    {"exact_roundtrips", roundtrips},
                    {"failures", failures},
                    {"kernel_complexes", kernels},
                    {"samples_drawn", samples},
                    {"seed", cfg.seed}});
  if (failures) {
    err << failures << " property failure(s)\n";
    return 1;
  }
  return 0;
}

int cmd_formulas(const RunConfig& cfg, std::ostream& out) {
  std::vector<json> rows;
  for (const auto& r : formula_ledger())
    rows.push_back(json{
        {"id", r.id}, {"expression", r.expression}, {"value", r.value}});
  write_table(out, cfg.format, {"id", "expression", "value"}, rows);
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Enumerate: return cmd_enumerate(cfg, out);
      case Command::Verify: return cmd_verify(cfg, out, err);
      case Command::Classify: return cmd_classify(cfg, out, err);
      case Command::Scrapbook: return cmd_scrapbook(cfg, out, err);
      case Command::Recon: return cmd_recon(cfg, out, err);
      case Command::Formulas: return cmd_formulas(cfg, out);
    }
    err << "unknown command\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Line complex toolkit for the 8-point X-ray transform"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json},
      {"csv", OutputFormat::Csv},
      {"tsv", OutputFormat::Tsv}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "worker threads")
        ->check(CLI::Range(1, 256));
  };

  auto* enumerate =
      app.add_subcommand("enumerate", "Count every complex by class");
  add_jobs(enumerate);
  add_format(enumerate);
  enumerate->add_flag("--fast", cfg.fast,
                      "classification only; skips the algebraic "
                      "cross-checks, so not authoritative");

  // verify has no --fast: the identities are only meaningful against
  // the fully cross-checked sweep.
  auto* verify = app.add_subcommand(
      "verify", "Check the closed-form identities against a fresh sweep");
  add_jobs(verify);
  add_format(verify);

  auto* classify = app.add_subcommand("classify", "Analyze one complex");
  auto* opt_input =
      classify->add_option("--input", cfg.input_path, "a .cplx file");
  auto* opt_lines = classify->add_option(
      "--lines", cfg.inline_lines, "inline pairs, e.g. \"0 1, 1 2, ...\"");
  opt_input->excludes(opt_lines);
  opt_lines->excludes(opt_input);
  add_format(classify);

  auto* scrapbook = app.add_subcommand(
      "scrapbook", "Export specimen drawings for every class");
  scrapbook->add_option("--out", cfg.output_dir, "target directory");
  scrapbook->add_option("--per-label", cfg.per_label, "specimens per class")
      ->check(CLI::Range(0, 100000));
  add_format(scrapbook);

  auto* recon = app.add_subcommand(
      "recon", "Randomized reconstruction and kernel checks");
  recon->add_option("--seed", cfg.seed, "random seed");
  recon->add_option("--trials", cfg.trials, "samples per property")
      ->check(CLI::Range(1, 1000000));
  add_format(recon);

  auto* formulas =
      app.add_subcommand("formulas", "Print the closed-form count table");
  add_format(formulas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (enumerate->parsed()) cfg.command = Command::Enumerate;
  if (verify->parsed()) cfg.command = Command::Verify;
  if (classify->parsed()) cfg.command = Command::Classify;
  if (scrapbook->parsed()) cfg.command = Command::Scrapbook;
  if (recon->parsed()) cfg.command = Command::Recon;
  if (formulas->parsed()) cfg.command = Command::Formulas;
  return run(cfg, out, err);
}

}  // namespace xray
