#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fatcob {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using HalfEdgeId = std::size_t;

inline constexpr std::size_t kNoCell = std::numeric_limits<std::size_t>::max();

struct VertexSpec {
  std::string name;
  bool isolated = false;
};

// An edge named e produces half-edges "e.0" at source and "e.1" at target.
struct EdgeSpec {
  std::string name;
  std::string source;
  std::string target;
};

// Half-edge combinatorial map. Vertices and edges are kept sorted by name,
// so index order is identifier order. Edge e owns half-edges 2e (side 0)
// and 2e+1 (side 1); the involution is h ^ 1.
class FatGraph {
 public:
  FatGraph() = default;

  static FatGraph create(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges,
                         const std::map<std::string, std::vector<std::string>>& orders);

  // Raw entry point: permutations on half-edges 0..n-1 with generated names.
  static FatGraph from_maps(std::size_t vertex_count, const std::vector<VertexId>& source,
                            const std::vector<HalfEdgeId>& involution,
                            const std::vector<HalfEdgeId>& sigma);

  // Shared constructor for derived graphs. Half-edge 2e+s of the input
  // belongs to edge_names[e]; inputs need not be sorted.
  static FatGraph assemble(std::vector<std::string> vertex_names, std::vector<bool> isolated,
                           std::vector<std::string> edge_names, const std::vector<VertexId>& source,
                           const std::vector<HalfEdgeId>& sigma);

  struct Assembled;
  // As assemble, also reporting where each input cell landed after sorting.
  static Assembled assemble_with_map(std::vector<std::string> vertex_names, std::vector<bool> isolated,
                                     std::vector<std::string> edge_names,
                                     const std::vector<VertexId>& source,
                                     const std::vector<HalfEdgeId>& sigma);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edge_names_.size(); }
  std::size_t half_edge_count() const { return source_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const std::string& edge_name(EdgeId e) const { return edge_names_.at(e); }
  std::string half_edge_name(HalfEdgeId h) const;
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& edge_names() const { return edge_names_; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;
  std::optional<HalfEdgeId> find_half_edge(const std::string& name) const;

  VertexId source(HalfEdgeId h) const { return source_[h]; }
  static HalfEdgeId involution(HalfEdgeId h) { return h ^ 1U; }
  static EdgeId edge_of(HalfEdgeId h) { return h >> 1U; }
  HalfEdgeId sigma(HalfEdgeId h) const { return sigma_[h]; }
  HalfEdgeId omega(HalfEdgeId h) const { return sigma_[h ^ 1U]; }

  // Cyclic order at v, rotated to start at its smallest half-edge.
  const std::vector<HalfEdgeId>& rotation(VertexId v) const { return rotation_[v]; }
  std::size_t valence(VertexId v) const { return rotation_[v].size(); }
  bool is_isolated(VertexId v) const { return isolated_[v]; }
  bool is_loop(EdgeId e) const { return source_[2 * e] == source_[2 * e + 1]; }

  const std::vector<VertexId>& source_map() const { return source_; }
  const std::vector<HalfEdgeId>& sigma_map() const { return sigma_; }

  bool operator==(const FatGraph& other) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<bool> isolated_;
  std::vector<std::string> edge_names_;
  std::vector<VertexId> source_;
  std::vector<HalfEdgeId> sigma_;
  std::vector<std::vector<HalfEdgeId>> rotation_;
};

struct FatGraph::Assembled {
  FatGraph graph;
  std::vector<VertexId> vertex_index;
  std::vector<HalfEdgeId> half_edge_index;
};

struct BoundaryCycles {
  std::vector<std::vector<HalfEdgeId>> cycles;
  std::vector<std::size_t> half_edge_to_cycle;
};

BoundaryCycles boundary_cycles(const FatGraph& g);

struct Components {
  std::vector<std::vector<VertexId>> vertices;
  std::vector<std::vector<HalfEdgeId>> half_edges;
  std::vector<std::size_t> vertex_component;
  std::size_t count() const { return vertices.size(); }
};

Components connected_components(const FatGraph& g);

struct SurfaceComponent {
  int genus = 0;
  int boundary_count = 0;
  std::int64_t euler_characteristic = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
};

struct SurfaceSignature {
  std::vector<SurfaceComponent> components;
  int genus = 0;
  int boundary_count = 0;
  std::int64_t euler_characteristic = 0;
};

SurfaceSignature surface_invariants(const FatGraph& g);

// old cell index -> new cell index, kNoCell when the cell disappeared.
struct CellCorrespondence {
  std::vector<VertexId> vertex;
  std::vector<HalfEdgeId> half_edge;
};

struct Subdivision {
  FatGraph graph;
  CellCorrespondence map;
  VertexId new_vertex = kNoCell;
};

// The edge keeps its name on the half next to its side-0 end; the new
// vertex and the second half get fresh names derived from the edge name.
Subdivision subdivide_edge(const FatGraph& g, EdgeId e);
Subdivision subdivide_edge(const FatGraph& g, const std::string& edge_name);

struct Smoothing {
  FatGraph graph;
  CellCorrespondence map;
};

// Removes bivalent vertices (lowest index first) whose two half-edges lie
// on distinct edges, joining the edges. Vertices flagged in keep survive.
Smoothing smooth_bivalent(const FatGraph& g, const std::vector<bool>& keep = {});

struct Union {
  FatGraph graph;
  CellCorrespondence left;
  CellCorrespondence right;
};

// Right-hand names that collide get primes appended.
Union disjoint_union(const FatGraph& a, const FatGraph& b);

// base, or base with primes appended until it is not in taken.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

}  // namespace fatcob
