#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fatcob/fatgraph.hpp"

namespace fatcob {

enum class LeafRole { None, In, Out };

// A fat graph with ordered incoming and outgoing leaves and a set of closed
// leaves. Built through decorate(), which checks every leaf condition.
class OpenClosedFatGraph {
 public:
  OpenClosedFatGraph() = default;
  explicit OpenClosedFatGraph(FatGraph g);

  const FatGraph& base() const { return base_; }
  const std::vector<VertexId>& in_leaves() const { return in_; }
  const std::vector<VertexId>& out_leaves() const { return out_; }
  // Sorted by vertex index.
  const std::vector<VertexId>& closed_leaves() const { return closed_; }

  LeafRole role(VertexId v) const;
  bool is_closed(VertexId v) const;
  // Position of v in its In or Out list, kNoCell for unlabeled vertices.
  std::size_t role_index(VertexId v) const;

  bool operator==(const OpenClosedFatGraph& other) const;

  friend OpenClosedFatGraph decorate(FatGraph g, std::vector<VertexId> in_leaves,
                                     std::vector<VertexId> out_leaves, std::vector<VertexId> closed);

 private:
  FatGraph base_;
  std::vector<VertexId> in_, out_, closed_;
};

OpenClosedFatGraph decorate(FatGraph g, std::vector<VertexId> in_leaves, std::vector<VertexId> out_leaves,
                            std::vector<VertexId> closed);
OpenClosedFatGraph decorate(FatGraph g, const std::vector<std::string>& in_leaves,
                            const std::vector<std::string>& out_leaves, const std::vector<std::string>& closed);

// The unique half-edge at a leaf vertex; its boundary cycle is the leaf's cycle.
HalfEdgeId leaf_half_edge(const FatGraph& g, VertexId leaf);

// Boundary cycle through a leaf, rotated to (L, leaf half-edge, A1, ..., Ak)
// where L is the half-edge at the attaching vertex.
std::vector<HalfEdgeId> anchored_leaf_cycle(const FatGraph& g, VertexId leaf);

struct IncomingCircle {
  std::size_t in_index = 0;  // position of the leaf in the In list
  VertexId leaf = kNoCell;
  HalfEdgeId attach = kNoCell;          // L
  std::vector<HalfEdgeId> circle;       // A1..Ak
};

// One entry per closed incoming leaf, in In order. No admissibility check.
std::vector<IncomingCircle> incoming_circles(const OpenClosedFatGraph& g);

enum class AdmissibilityFailure { EmptyCircle, RepeatedVertex, RepeatedEdge, SharedWithCircle, ContainsInLeaf };

struct AdmissibilityWitness {
  VertexId leaf = kNoCell;
  AdmissibilityFailure kind = AdmissibilityFailure::EmptyCircle;
  std::string cell;  // name of the offending vertex or edge, empty for EmptyCircle
  std::string describe(const FatGraph& g) const;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::optional<AdmissibilityWitness> witness;
};

AdmissibilityReport is_admissible(const OpenClosedFatGraph& g);

struct IncomingPartition {
  std::vector<bool> vertex_in, edge_in, half_edge_in;
  std::vector<VertexId> v_in, e_v;
  std::vector<EdgeId> e_in, e_e;
  std::vector<HalfEdgeId> h_in, e_h;
  // For each vertex of v_in, the In position of the leaf whose incoming part contains it.
  std::vector<std::size_t> in_owner;
  std::vector<IncomingCircle> circles;
};

IncomingPartition incoming_partition(const OpenClosedFatGraph& g);

enum class OneManifold { Circle, Interval };
enum class BoundaryKind { IncomingCircle, OutgoingCircle, Intervals, Free };

struct OpenLeafOnCycle {
  LeafRole role = LeafRole::None;
  std::size_t index = 0;
};

struct BoundaryClass {
  std::size_t cycle = 0;
  std::size_t component = 0;
  BoundaryKind kind = BoundaryKind::Free;
  std::size_t closed_index = kNoCell;         // In or Out position of the closed leaf
  std::vector<OpenLeafOnCycle> open_leaves;    // in cycle order from the cycle's first half-edge
};

struct CobordismComponent {
  int genus = 0;
  int boundary_count = 0;
  std::int64_t euler_characteristic = 0;
  int in_circles = 0, in_intervals = 0, out_circles = 0, out_intervals = 0, free = 0;
  std::vector<std::size_t> in_indices, out_indices;

  bool operator==(const CobordismComponent&) const = default;
};

struct CobordismSignature {
  std::vector<CobordismComponent> components;
  std::vector<OneManifold> source, target;
  std::vector<BoundaryClass> boundaries;
};

CobordismSignature cobordism_signature(const OpenClosedFatGraph& g);

// Equal as cobordisms: same source and target and the same multiset of
// components, each with the same attached In/Out positions.
bool equivalent(const CobordismSignature& a, const CobordismSignature& b);

bool check_positive_boundary(const OpenClosedFatGraph& g);

std::string to_string(const std::vector<OneManifold>& m);

struct OpenClosedSubdivision {
  OpenClosedFatGraph graph;
  CellCorrespondence map;
  VertexId new_vertex = kNoCell;
};

OpenClosedSubdivision subdivide_edge(const OpenClosedFatGraph& g, EdgeId e);

struct OpenClosedSmoothing {
  OpenClosedFatGraph graph;
  CellCorrespondence map;
};

// Decorated leaves are never bivalent, so every bivalent vertex is undecorated.
OpenClosedSmoothing smooth_bivalent(const OpenClosedFatGraph& g);

struct OpenClosedUnion {
  OpenClosedFatGraph graph;
  CellCorrespondence left, right;
};

// In and Out lists are concatenated, left first.
OpenClosedUnion disjoint_union(const OpenClosedFatGraph& a, const OpenClosedFatGraph& b);

// Pushes decorations through a vertex correspondence onto a new base graph.
OpenClosedFatGraph transport_decorations(const OpenClosedFatGraph& g, FatGraph target,
                                         const std::vector<VertexId>& vertex_map);

}  // namespace fatcob
