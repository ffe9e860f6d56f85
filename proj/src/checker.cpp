// checker.cpp
// All graph work runs on bit rows: components grow by OR-ing adjacency
// rows to a fixed point, bipartiteness is BFS layer 2-coloring, and the
// 2-core (what survives repeated leaf peeling) exposes the unique cycle
// of a unicyclic component.

#include "xray/checker.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace xray {

int ComponentSummary::vertex_count() const {
  return std::popcount(vertex_mask);
}

std::vector<int> ComponentSummary::vertices() const {
  std::vector<int> out;
  for (std::uint16_t m = vertex_mask; m;) {
    out.push_back(std::countr_zero(m));
    m &= static_cast<std::uint16_t>(m - 1);
  }
  return out;
}

SmallGraph::SmallGraph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > 16)
    throw std::out_of_range("SmallGraph: vertex count must be 0..16");
}

SmallGraph SmallGraph::from_complex(const Complex& c) {
  SmallGraph g(kPointCount);
  for (LineId l : c.lines()) {
    auto [a, b] = line_endpoints(l);
    g.add_edge(a, b);
  }
  return g;
}

void SmallGraph::add_edge(int a, int b) {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    throw std::out_of_range("SmallGraph: vertex out of range");
  if (a == b) throw std::invalid_argument("SmallGraph: no loops");
  if (adj_[a] & (1u << b))
    throw std::invalid_argument("SmallGraph: duplicate edge {" +
                                std::to_string(a) + "," + std::to_string(b) +
                                "}");
  adj_[a] |= static_cast<std::uint16_t>(1u << b);
  adj_[b] |= static_cast<std::uint16_t>(1u << a);
  ++edges_;
}

std::uint16_t SmallGraph::adjacency(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("SmallGraph: vertex");
  return adj_[v];
}

int SmallGraph::degree(int v) const { return std::popcount(adjacency(v)); }

std::uint16_t SmallGraph::all_vertices_mask() const {
  return static_cast<std::uint16_t>((1u << n_) - 1);
}

std::uint16_t SmallGraph::covered_mask() const {
  std::uint16_t m = 0;
  for (int v = 0; v < n_; ++v)
    if (adj_[v]) m |= static_cast<std::uint16_t>(1u << v);
  return m;
}

namespace detail {

void scan_graph(int n, const std::uint16_t* adj, std::uint16_t vertex_mask,
                Scan& out) noexcept {
  // Peel vertices with at most one live neighbor until stable; what
  // survives is the 2-core.  Edges leaving vertex_mask are ignored, so
  // this works on induced subgraphs too.
  std::uint16_t alive = vertex_mask;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      std::uint16_t bit = static_cast<std::uint16_t>(1u << v);
      if (!(alive & bit)) continue;
      if (std::popcount(static_cast<std::uint16_t>(adj[v] & alive)) <= 1) {
        alive = static_cast<std::uint16_t>(alive & ~bit);
        changed = true;
      }
    }
  }
  out.two_core = alive;

  out.count = 0;
  std::uint16_t todo = vertex_mask;
  while (todo) {
    std::uint16_t seed = static_cast<std::uint16_t>(todo & -todo);

    // Grow the component by OR-ing adjacency rows to a fixed point.
    std::uint16_t comp = seed;
    for (;;) {
      std::uint16_t grown = comp;
      for (std::uint16_t m = comp; m;) {
        int v = std::countr_zero(m);
        m &= static_cast<std::uint16_t>(m - 1);
        grown |= adj[v];
      }
      grown &= vertex_mask;
      if (grown == comp) break;
      comp = grown;
    }
    todo = static_cast<std::uint16_t>(todo & ~comp);

    int degree_sum = 0;
    for (std::uint16_t m = comp; m;) {
      int v = std::countr_zero(m);
      m &= static_cast<std::uint16_t>(m - 1);
      degree_sum += std::popcount(static_cast<std::uint16_t>(adj[v] & comp));
    }

    // BFS layering from the seed; bipartite iff no edge stays inside a
    // layer-parity class.
    std::uint16_t color_even = seed;
    std::uint16_t color_odd = 0;
    std::uint16_t frontier = seed;
    bool even_layer = true;
    while (frontier) {
      std::uint16_t next = 0;
      for (std::uint16_t m = frontier; m;) {
        int v = std::countr_zero(m);
        m &= static_cast<std::uint16_t>(m - 1);
        next |= adj[v];
      }
      next &= static_cast<std::uint16_t>(comp & ~(color_even | color_odd));
      if (even_layer)
        color_odd |= next;
      else
        color_even |= next;
      frontier = next;
      even_layer = !even_layer;
    }
    bool bipartite = true;
    for (std::uint16_t m = color_even; m && bipartite;) {
      int v = std::countr_zero(m);
      m &= static_cast<std::uint16_t>(m - 1);
      if (adj[v] & color_even) bipartite = false;
    }
    for (std::uint16_t m = color_odd; m && bipartite;) {
      int v = std::countr_zero(m);
      m &= static_cast<std::uint16_t>(m - 1);
      if (adj[v] & color_odd) bipartite = false;
    }

    out.comp[out.count++] = ScanEntry{
        comp, static_cast<std::int16_t>(degree_sum / 2),
        static_cast<std::uint16_t>(comp & alive), bipartite};
  }
}

std::uint8_t complex_adjacency(std::uint32_t line_mask,
                               std::uint16_t adj[kPointCount]) noexcept {
  for (int v = 0; v < kPointCount; ++v) adj[v] = 0;
  std::uint8_t covered = 0;
  while (line_mask) {
    int l = std::countr_zero(line_mask);
    line_mask &= line_mask - 1;
    auto [a, b] = kLines.endpoints[l];
    adj[a] |= static_cast<std::uint16_t>(1u << b);
    adj[b] |= static_cast<std::uint16_t>(1u << a);
    covered |= kLines.point_mask[l];
  }
  return covered;
}

ComponentKind kind_of(const ScanEntry& e) noexcept {
  int v = std::popcount(e.vertex_mask);
  if (e.edge_count == v - 1) return ComponentKind::Tree;
  if (e.edge_count == v) {
    return (std::popcount(e.cycle_mask) % 2 == 0) ? ComponentKind::UnicyclicEven
                                                  : ComponentKind::UnicyclicOdd;
  }
  return ComponentKind::Multicyclic;
}

}  // namespace detail

namespace {

std::vector<ComponentSummary> summarize(const detail::Scan& scan) {
  std::vector<ComponentSummary> out;
  out.reserve(scan.count);
  for (int i = 0; i < scan.count; ++i) {
    const auto& e = scan.comp[i];
    ComponentSummary s;
    s.vertex_mask = e.vertex_mask;
    s.edge_count = e.edge_count;
    s.kind = detail::kind_of(e);
    s.bipartite = e.bipartite;
    if (s.kind == ComponentKind::UnicyclicOdd ||
        s.kind == ComponentKind::UnicyclicEven)
      s.cycle_length = std::popcount(e.cycle_mask);
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<ComponentSummary> components_of(const SmallGraph& g,
                                            std::uint16_t vertex_mask) {
  if (vertex_mask & ~g.all_vertices_mask())
    throw std::out_of_range("components_of: mask outside the vertex set");
  std::array<std::uint16_t, 16> adj{};
  for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.adjacency(v);
  detail::Scan scan;
  detail::scan_graph(g.vertex_count(), adj.data(), vertex_mask, scan);
  return summarize(scan);
}

std::uint8_t covered_point_mask(const Complex& c) {
  std::uint16_t adj[kPointCount];
  return detail::complex_adjacency(c.mask(), adj);
}

std::vector<PointId> covered_points(const Complex& c) {
  std::vector<PointId> out;
  std::uint8_t m = covered_point_mask(c);
  while (m) {
    out.push_back(static_cast<PointId>(std::countr_zero(m)));
    m &= static_cast<std::uint8_t>(m - 1);
  }
  return out;
}

std::vector<ComponentSummary> components(const Complex& c) {
  std::uint16_t adj[kPointCount];
  std::uint8_t covered = detail::complex_adjacency(c.mask(), adj);
  detail::Scan scan;
  detail::scan_graph(kPointCount, adj, covered, scan);
  return summarize(scan);
}

AdmissibilityVerdict is_admissible_graph(const Complex& c) {
  std::uint16_t adj[kPointCount];
  std::uint8_t covered = detail::complex_adjacency(c.mask(), adj);
  detail::Scan scan;
  detail::scan_graph(kPointCount, adj, covered, scan);

  AdmissibilityVerdict v;
  std::uint8_t omitted = static_cast<std::uint8_t>(~covered);
  while (omitted) {
    v.omitted_points.push_back(
        static_cast<PointId>(std::countr_zero(omitted)));
    omitted &= static_cast<std::uint8_t>(omitted - 1);
  }
  v.bipartite_components = static_cast<int>(v.omitted_points.size());
  for (int i = 0; i < scan.count; ++i)
    if (scan.comp[i].bipartite) ++v.bipartite_components;
  v.admissible = v.bipartite_components == 0;
  return v;
}

}  // namespace xray
