#pragma once
// checker.hpp
// Graph-side admissibility test.  A complex is admissible exactly when
// its edge set touches all 8 points and no connected component is
// bipartite; an omitted point counts as a bipartite singleton.  This is
// the combinatorial mirror of the rank criterion in linalg.hpp.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "xray/geometry.hpp"

namespace xray {

enum class ComponentKind {
  Tree,           // edges == vertices - 1
  UnicyclicOdd,   // edges == vertices, odd cycle
  UnicyclicEven,  // edges == vertices, even cycle
  Multicyclic,    // edges > vertices
};

struct ComponentSummary {
  std::uint16_t vertex_mask = 0;
  int edge_count = 0;
  ComponentKind kind = ComponentKind::Tree;
  bool bipartite = true;
  std::optional<int> cycle_length;  // present iff unicyclic

  int vertex_count() const;
  std::vector<int> vertices() const;  // ascending
};

struct AdmissibilityVerdict {
  bool admissible = false;
  std::vector<PointId> omitted_points;  // ascending
  int bipartite_components = 0;         // omitted points included
};

// Undirected simple graph on at most 16 vertices, adjacency as bit rows.
// Big enough for every complex (8 points) and for randomized cross
// checks of the rank identity on larger graphs.
class SmallGraph {
 public:
  explicit SmallGraph(int vertex_count);
  static SmallGraph from_complex(const Complex& c);

  // Throws std::invalid_argument on loops and duplicates,
  // std::out_of_range on vertices outside 0..n-1.
  void add_edge(int a, int b);

  int vertex_count() const { return n_; }
  int edge_count() const { return edges_; }
  std::uint16_t adjacency(int v) const;
  int degree(int v) const;
  std::uint16_t all_vertices_mask() const;
  std::uint16_t covered_mask() const;  // vertices with at least one edge

 private:
  int n_;
  int edges_ = 0;
  std::array<std::uint16_t, 16> adj_{};
};

// Components of the subgraph induced on vertex_mask.  Isolated vertices
// inside the mask come back as singleton tree components.
std::vector<ComponentSummary> components_of(const SmallGraph& g,
                                            std::uint16_t vertex_mask);

// Complex-level views of the graph on the 8 points.
std::uint8_t covered_point_mask(const Complex& c);
std::vector<PointId> covered_points(const Complex& c);

// Components on the covered points only; omitted points do not appear.
std::vector<ComponentSummary> components(const Complex& c);

AdmissibilityVerdict is_admissible_graph(const Complex& c);

namespace detail {

// Fixed-capacity component scan shared with the sweep hot path.
struct ScanEntry {
  std::uint16_t vertex_mask;
  std::int16_t edge_count;
  std::uint16_t cycle_mask;  // the component's 2-core; empty for trees
  bool bipartite;
};

struct Scan {
  int count = 0;
  std::array<ScanEntry, 16> comp;
  std::uint16_t two_core = 0;
};

void scan_graph(int n, const std::uint16_t* adj, std::uint16_t vertex_mask,
                Scan& out) noexcept;

// Build a complex's adjacency rows.  Returns the covered-point mask.
std::uint8_t complex_adjacency(std::uint32_t line_mask,
                               std::uint16_t adj[kPointCount]) noexcept;

ComponentKind kind_of(const ScanEntry& e) noexcept;

}  // namespace detail

}  // namespace xray
