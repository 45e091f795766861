#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fatcob/open_closed.hpp"

namespace fatcob {

// Image of a half-edge: another half-edge, or the vertex it collapses to.
struct CellImage {
  bool collapsed = false;
  std::size_t index = 0;

  static CellImage half_edge(HalfEdgeId h) { return {false, h}; }
  static CellImage vertex(VertexId v) { return {true, v}; }
  bool operator==(const CellImage&) const = default;
};

// A total cell map between open-closed fat graphs (plain fat graphs carry
// empty decorations). Construction does not validate; see validate_morphism.
class Morphism {
 public:
  Morphism(OpenClosedFatGraph source, OpenClosedFatGraph target, std::vector<VertexId> vertex_map,
           std::vector<CellImage> half_edge_map);
  Morphism(std::shared_ptr<const OpenClosedFatGraph> source, std::shared_ptr<const OpenClosedFatGraph> target,
           std::vector<VertexId> vertex_map, std::vector<CellImage> half_edge_map);

  static Morphism identity(const OpenClosedFatGraph& g);

  const OpenClosedFatGraph& source() const { return *source_; }
  const OpenClosedFatGraph& target() const { return *target_; }
  const std::shared_ptr<const OpenClosedFatGraph>& source_ptr() const { return source_; }
  const std::shared_ptr<const OpenClosedFatGraph>& target_ptr() const { return target_; }
  const std::vector<VertexId>& vertex_map() const { return vertex_map_; }
  const std::vector<CellImage>& half_edge_map() const { return half_edge_map_; }

  bool collapses(HalfEdgeId h) const { return half_edge_map_[h].collapsed; }

  // Same graphs and same cell maps.
  bool operator==(const Morphism& other) const;

 private:
  std::shared_ptr<const OpenClosedFatGraph> source_, target_;
  std::vector<VertexId> vertex_map_;
  std::vector<CellImage> half_edge_map_;
};

enum class MorphismClause {
  Shape,
  SourceCommutes,
  InvolutionCommutes,
  Surjective,
  UniquePreimage,
  TreePreimage,
  BoundaryCycles,
  Decorations,
};

const char* clause_name(MorphismClause c);

struct MorphismWitness {
  MorphismClause clause = MorphismClause::Shape;
  std::string cell;
  std::string describe() const;
};

struct MorphismReport {
  bool valid = true;
  std::optional<MorphismWitness> witness;
};

MorphismReport validate_morphism(const Morphism& m);

struct Collapse {
  OpenClosedFatGraph graph;
  Morphism morphism;
};

// Contracts each edge of the forest; merged vertices take the smallest name.
Collapse collapse_edges(const OpenClosedFatGraph& g, const std::vector<EdgeId>& forest);
Collapse collapse_edges(const FatGraph& g, const std::vector<EdgeId>& forest);

Morphism compose(const Morphism& m2, const Morphism& m1);

}  // namespace fatcob
