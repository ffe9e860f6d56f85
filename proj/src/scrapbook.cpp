// scrapbook.cpp
// Exports are assembled as plain strings with one convention: points
// appear as p0..p7, edges in ascending line order, so identical
// entries always serialize to identical bytes.

#include "xray/scrapbook.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace xray {

namespace {

std::string default_caption(TaxonomyLabel label, std::uint64_t rank) {
  return std::string(label_name(label)) + ", rank " + std::to_string(rank);
}

ScrapbookEntry make_entry(TaxonomyLabel label, std::uint32_t mask,
                          std::uint64_t rank) {
  return ScrapbookEntry{label, Complex::from_mask(mask), std::nullopt,
                        default_caption(label, rank)};
}

std::pair<double, double> point_position(const ScrapbookEntry& e, int i) {
  if (e.layout_hint) return (*e.layout_hint)[i];
  // Two rows of four.
  return {2.0 * (i % 4), i < 4 ? 2.0 : 0.0};
}

std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

InsufficientPopulationError::InsufficientPopulationError(
    TaxonomyLabel label, std::uint64_t population, int requested)
    : std::runtime_error("class " + std::string(label_name(label)) +
                         " has " + std::to_string(population) +
                         " members, " + std::to_string(requested) +
                         " requested"),
      label_(label),
      population_(population) {}

std::vector<ScrapbookEntry> representatives(TaxonomyLabel label, int k) {
  if (k < 0)
    throw std::invalid_argument("representatives: negative count");
  std::vector<ScrapbookEntry> out;
  if (k == 0) return out;
  std::uint64_t population = 0;
  std::uint32_t mask = 0xFFu;
  for (std::uint64_t r = 0; r < kComplexCount;
       ++r, mask = next_complex_mask(mask)) {
    if (detail::analyze_mask(mask).label != label) continue;
    ++population;
    if (out.size() < static_cast<std::size_t>(k)) {
      out.push_back(make_entry(label, mask, r));
      if (out.size() == static_cast<std::size_t>(k)) return out;
    }
  }
  if (out.size() < static_cast<std::size_t>(k))
    throw InsufficientPopulationError(label, population, k);
  return out;
}

std::string export_dot(const ScrapbookEntry& e) {
  std::ostringstream os;
  os << "// label: " << label_name(e.label) << "\n";
  os << "// caption: " << e.caption << "\n";
  os << "graph complex_" << rank_complex(e.complex) << " {\n";
  os << "  node [shape=circle];\n  ";
  for (int i = 0; i < kPointCount; ++i)
    os << (i ? " p" : "p") << i << ";";
  os << "\n";
  for (LineId l : e.complex.lines()) {
    auto [a, b] = line_endpoints(l);
    os << "  p" << int{a} << " -- p" << int{b} << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_tikz(const ScrapbookEntry& e) {
  std::ostringstream os;
  os << "% label: " << label_name(e.label) << "\n";
  os << "% caption: " << e.caption << "\n";
  os << "\\begin{tikzpicture}[every node/.style={circle,draw,inner "
        "sep=1.5pt}]\n";
  for (int i = 0; i < kPointCount; ++i) {
    auto [x, y] = point_position(e, i);
    os << "  \\node (p" << i << ") at (" << fmt_coord(x) << ", "
       << fmt_coord(y) << ") {" << i << "};\n";
  }
  for (LineId l : e.complex.lines()) {
    auto [a, b] = line_endpoints(l);
    os << "  \\draw (p" << int{a} << ") -- (p" << int{b} << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string export_cplx(const ScrapbookEntry& e) {
  std::ostringstream os;
  os << "points: " << kPointCount << "\n";
  for (LineId l : e.complex.lines()) {
    auto [a, b] = line_endpoints(l);
    os << "line: " << int{a} << " " << int{b} << "\n";
  }
  os << "label: " << label_name(e.label) << "\n";
  return os.str();
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

ScrapbookEntry parse_cplx(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_points = false;
  std::vector<std::pair<PointId, PointId>> pairs;
  std::optional<TaxonomyLabel> label;

  while (std::getline(in, line)) {
    ++lineno;
    // Tolerate blank lines anywhere.
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (label.has_value())
      throw ParseError(lineno, "content after the label row");
    if (!saw_points) {
      if (key != "points:")
        throw ParseError(lineno, "expected 'points: 8'");
      int n = -1;
      ls >> n;
      std::string rest;
      if (!ls || (ls >> rest))
        throw ParseError(lineno, "malformed points row");
      if (n != kPointCount)
        throw ParseError(lineno, "only 8-point complexes are supported");
      saw_points = true;
      continue;
    }
    if (key == "line:") {
      if (pairs.size() == kComplexSize)
        throw ParseError(lineno, "more than 8 lines");
      int a = -1, b = -1;
      ls >> a >> b;
      std::string rest;
      if (!ls || (ls >> rest))
        throw ParseError(lineno, "malformed line row");
      if (a < 0 || a >= kPointCount || b < 0 || b >= kPointCount)
        throw ParseError(lineno, "point out of range");
      if (a == b) throw ParseError(lineno, "line endpoints must differ");
      for (auto [x, y] : pairs)
        if ((x == a && y == b) || (x == b && y == a))
          throw ParseError(lineno, "duplicate line");
      pairs.push_back({static_cast<PointId>(a), static_cast<PointId>(b)});
      continue;
    }
    if (key == "label:") {
      if (pairs.size() != kComplexSize)
        throw ParseError(lineno, "expected 8 lines before the label");
      std::string name;
      ls >> name;
      std::string rest;
      if (name.empty() || (ls >> rest))
        throw ParseError(lineno, "malformed label row");
      label = label_from_name(name);
      if (!label) throw ParseError(lineno, "unknown label '" + name + "'");
      continue;
    }
    throw ParseError(lineno, "unrecognized row '" + key + "'");
  }
  if (!saw_points) throw ParseError(lineno + 1, "missing points row");
  if (!label) throw ParseError(lineno + 1, "missing label row");
  return ScrapbookEntry{*label, Complex::from_point_pairs(pairs),
                        std::nullopt, ""};
}

std::vector<ScrapbookIndexRow> build_scrapbook(
    const std::filesystem::path& dir, int k_per_label) {
  if (k_per_label < 0)
    throw std::invalid_argument("build_scrapbook: negative count");

  // One pass collects the lowest-rank specimens and the populations.
  std::array<std::uint64_t, kLabelCount> population{};
  std::array<std::vector<std::pair<std::uint32_t, std::uint64_t>>,
             kLabelCount>
      picks;  // (mask, rank)
  std::uint32_t mask = 0xFFu;
  for (std::uint64_t r = 0; r < kComplexCount;
       ++r, mask = next_complex_mask(mask)) {
    auto idx = static_cast<std::size_t>(detail::analyze_mask(mask).label);
    ++population[idx];
    if (picks[idx].size() < static_cast<std::size_t>(k_per_label))
      picks[idx].push_back({mask, r});
  }

  std::vector<ScrapbookIndexRow> rows;
  for (TaxonomyLabel l : kAllLabels) {
    auto idx = static_cast<std::size_t>(l);
    rows.push_back({l, population[idx],
                    static_cast<int>(picks[idx].size())});
  }
  std::sort(rows.begin(), rows.end(),
            [](const ScrapbookIndexRow& a, const ScrapbookIndexRow& b) {
              return label_name(a.label) < label_name(b.label);
            });

  std::filesystem::create_directories(dir);
  auto write_file = [](const std::filesystem::path& p,
                       const std::string& content) {
    std::ofstream f(p, std::ios::binary);
    f << content;
    if (!f) throw std::runtime_error("cannot write " + p.string());
  };

  for (const auto& row : rows) {
    auto idx = static_cast<std::size_t>(row.label);
    auto subdir = dir / std::string(label_name(row.label));
    std::filesystem::create_directories(subdir);
    for (auto [pick_mask, pick_rank] : picks[idx]) {
      auto entry = make_entry(row.label, pick_mask, pick_rank);
      auto stem = subdir / std::to_string(pick_rank);
      write_file(stem.string() + ".dot", export_dot(entry));
      write_file(stem.string() + ".tex", export_tikz(entry));
      write_file(stem.string() + ".cplx", export_cplx(entry));
    }
  }

  std::ostringstream index;
  index << "label\tpopulation\temitted\n";
  for (const auto& row : rows)
    index << label_name(row.label) << "\t" << row.population << "\t"
          << row.emitted << "\n";
  write_file(dir / "index.tsv", index.str());
  return rows;
}

}  // namespace xray
