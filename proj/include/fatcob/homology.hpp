#pragma once

#include <cstdint>
#include <vector>

#include "fatcob/gluing.hpp"
#include "fatcob/linalg.hpp"
#include "fatcob/morphism.hpp"
#include "fatcob/open_closed.hpp"

namespace fatcob {

struct ChainCell {
  enum class Kind { Midpoint, Vertex };
  Kind kind = Kind::Midpoint;
  std::size_t index = 0;  // edge or vertex index
  bool operator==(const ChainCell&) const = default;
};

// The two-term complex Q^{eH} -> Q^{eE + eV} computing H_*(G, incoming part)
// of the once-subdivided graph. Rows are edge midpoints then extra vertices.
struct ChainComplexPair {
  std::vector<HalfEdgeId> basis1;
  std::vector<ChainCell> basis0;
  Matrix differential;
  // Kernel basis from the reduced row echelon form; h1_free_columns[j] is
  // the column where h1_basis[j] is 1 and every other basis vector is 0.
  std::vector<Vector> h1_basis;
  std::vector<std::size_t> h1_free_columns;
  // Rows whose unit vectors complete the image of d to all of C0.
  std::vector<std::size_t> h0_basis;

  std::vector<std::size_t> column_of_half_edge;  // kNoCell off eH
  std::vector<std::size_t> row_of_edge;          // kNoCell off eE
  std::vector<std::size_t> row_of_vertex;        // kNoCell off eV
  IncomingPartition partition;

  std::size_t rank_h1() const { return h1_basis.size(); }
  std::size_t rank_h0() const { return h0_basis.size(); }
  std::int64_t euler_characteristic() const {
    return static_cast<std::int64_t>(rank_h0()) - static_cast<std::int64_t>(rank_h1());
  }

  // Coordinates of a cycle in h1_basis.
  Vector h1_coordinates(const Vector& cycle) const;
  // Coordinates in h0_basis of the class of a 0-chain.
  Vector h0_coordinates(const Vector& chain) const;
};

ChainComplexPair relative_chain_complex(const OpenClosedFatGraph& g);

// |eV| - |eE|, checked against rank H0 - rank H1.
std::int64_t relative_euler_char(const OpenClosedFatGraph& g);

std::int64_t operation_degree(const OpenClosedFatGraph& g, int d);

// A graded line: degree plus the scalar of a vector relative to the
// canonical generator.
struct GradedLine {
  std::int64_t degree = 0;
  Rational scalar = 1;
  int sign() const { return fatcob::sign(scalar); }
};

GradedLine tensor(const GradedLine& a, const GradedLine& b);
int swap_sign(const GradedLine& a, const GradedLine& b);
GradedLine power(const GradedLine& l, int d);

struct ChainMap {
  Matrix f1;  // target basis1 x source basis1
  Matrix f0;  // target basis0 x source basis0
};

// Requires a valid morphism between admissible graphs; checks that the map
// commutes with the differentials and is a quasi-isomorphism.
ChainMap chain_map_of_morphism(const Morphism& m);

struct MorphismDeterminant {
  Matrix forward_h1, forward_h0;  // induced by the chain map
  Matrix section_h1, section_h0;  // induced by the section maps
  int forward_sign = 1;
  int section_sign = 1;
};

MorphismDeterminant morphism_determinant(const Morphism& m);

// Sign of the induced map on det(H1) (x) det(H0)^*; both routes must agree.
int morphism_det_sign(const Morphism& m);

struct GluingDeterminant {
  Glued glued;
  ChainComplexPair left, right, glued_complex;
  // Images in the glued complex of the left H1 basis followed by lifts of
  // the kernel of the connecting map, and of the H0 complement followed by
  // lifts of the right H0 basis.
  std::vector<Vector> image_h1, image_h0;
  Rational scalar = 1;  // the iso on first tensor powers
};

GluingDeterminant gluing_determinant(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2,
                                     const GluingMatch& match);

// The iso det(chi_1)^d (x) det(chi_2)^d -> det(chi_glued)^d.
GradedLine gluing_det_iso(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2, const GluingMatch& match,
                          int d);

// The connecting map H1(G, incoming part) -> H0(incoming part), one
// coordinate per incoming leaf.
Vector incoming_boundary(const ChainComplexPair& c, const OpenClosedFatGraph& g, const Vector& cycle);

struct SkewAssociativity {
  int sign = 1;
  Rational ratio = 1;  // first bracketing over second, on first powers
  OpenClosedFatGraph first, second;
};

// Compares (P + C) # P with (C + P) # P, P the pants and C the cylinder,
// inside det of the three-legged pants.
SkewAssociativity skew_associativity(int d);
int skew_associativity_sign(int d);

}  // namespace fatcob
