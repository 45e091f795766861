#include "fatcob/homology.hpp"

#include "fatcob/error.hpp"
#include "fatcob/standard_graphs.hpp"

namespace fatcob {

namespace {

Vector unit(std::size_t dim, std::size_t k) {
  Vector v(dim);
  v[k] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Rational det_of_columns(std::size_t dim, const std::vector<Vector>& columns) {
  if (columns.size() != dim) fail(ErrorCode::Internal, "expected a square change of basis");
  return determinant(Matrix::from_columns(dim, columns));
}

}  // namespace

ChainComplexPair relative_chain_complex(const OpenClosedFatGraph& g) {
  const FatGraph& base = g.base();
  ChainComplexPair c;
  c.partition = incoming_partition(g);
  const auto& p = c.partition;
  c.basis1 = p.e_h;
  c.column_of_half_edge.assign(base.half_edge_count(), kNoCell);
  for (std::size_t j = 0; j < c.basis1.size(); ++j) c.column_of_half_edge[c.basis1[j]] = j;
  c.row_of_edge.assign(base.edge_count(), kNoCell);
  c.row_of_vertex.assign(base.vertex_count(), kNoCell);
  for (EdgeId e : p.e_e) {
    c.row_of_edge[e] = c.basis0.size();
    c.basis0.push_back({ChainCell::Kind::Midpoint, e});
  }
  for (VertexId v : p.e_v) {
    c.row_of_vertex[v] = c.basis0.size();
    c.basis0.push_back({ChainCell::Kind::Vertex, v});
  }

  c.differential = Matrix(c.basis0.size(), c.basis1.size());
  for (std::size_t j = 0; j < c.basis1.size(); ++j) {
    HalfEdgeId h = c.basis1[j];
    c.differential.at(c.row_of_edge[FatGraph::edge_of(h)], j) += 1;
    if (!p.vertex_in[base.source(h)]) c.differential.at(c.row_of_vertex[base.source(h)], j) -= 1;
  }

  Nullspace ns = nullspace(c.differential);
  c.h1_basis = std::move(ns.basis);
  c.h1_free_columns = std::move(ns.free_columns);
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < c.basis1.size(); ++j) columns.push_back(c.differential.column(j));
  c.h0_basis = complete_with_units(c.basis0.size(), columns);
  return c;
}

Vector ChainComplexPair::h1_coordinates(const Vector& cycle) const {
  if (!is_zero(differential.apply(cycle))) fail(ErrorCode::Internal, "chain is not a cycle");
  Vector out;
  for (std::size_t c : h1_free_columns) out.push_back(cycle[c]);
  return out;
}

Vector ChainComplexPair::h0_coordinates(const Vector& chain) const {
  Matrix m(basis0.size(), basis1.size() + h0_basis.size());
  for (std::size_t r = 0; r < basis0.size(); ++r)
    for (std::size_t c = 0; c < basis1.size(); ++c) m.at(r, c) = differential.at(r, c);
  for (std::size_t k = 0; k < h0_basis.size(); ++k) m.at(h0_basis[k], basis1.size() + k) = 1;
  auto x = solve(m, chain);
  if (!x) fail(ErrorCode::Internal, "homology basis does not span the cokernel");
  return Vector(x->begin() + static_cast<std::ptrdiff_t>(basis1.size()), x->end());
}

std::int64_t relative_euler_char(const OpenClosedFatGraph& g) {
  ChainComplexPair c = relative_chain_complex(g);
  std::int64_t cells = static_cast<std::int64_t>(c.partition.e_v.size()) -
                       static_cast<std::int64_t>(c.partition.e_e.size());
  if (cells != c.euler_characteristic()) fail(ErrorCode::Internal, "rank count disagrees with the cell count");
  return cells;
}

std::int64_t operation_degree(const OpenClosedFatGraph& g, int d) {
  if (d < 0) fail(ErrorCode::InvalidArgument, "dimension must be nonnegative");
  return static_cast<std::int64_t>(d) * relative_euler_char(g);
}

GradedLine tensor(const GradedLine& a, const GradedLine& b) { return {a.degree + b.degree, a.scalar * b.scalar}; }

int swap_sign(const GradedLine& a, const GradedLine& b) {
  return ((a.degree % 2 != 0) && (b.degree % 2 != 0)) ? -1 : 1;
}

GradedLine power(const GradedLine& l, int d) {
  if (d < 0) fail(ErrorCode::InvalidArgument, "tensor power must be nonnegative");
  GradedLine out{l.degree * d, 1};
  for (int k = 0; k < d; ++k) out.scalar *= l.scalar;
  return out;
}

namespace {

struct MorphismComplexes {
  ChainComplexPair source, target;
  ChainMap map;
};

MorphismComplexes build_chain_map(const Morphism& m) {
  auto report = validate_morphism(m);
  if (!report.valid) fail(ErrorCode::InvalidMorphism, report.witness->describe());
  MorphismComplexes mc{relative_chain_complex(m.source()), relative_chain_complex(m.target()), {}};
  const auto& cs = mc.source;
  const auto& ct = mc.target;
  const FatGraph& g0 = m.source().base();

  mc.map.f1 = Matrix(ct.basis1.size(), cs.basis1.size());
  for (std::size_t j = 0; j < cs.basis1.size(); ++j) {
    const CellImage& img = m.half_edge_map()[cs.basis1[j]];
    if (img.collapsed) continue;
    std::size_t col = ct.column_of_half_edge[img.index];
    if (col != kNoCell) mc.map.f1.at(col, j) = 1;
  }
  mc.map.f0 = Matrix(ct.basis0.size(), cs.basis0.size());
  for (std::size_t r = 0; r < cs.basis0.size(); ++r) {
    const ChainCell& cell = cs.basis0[r];
    std::size_t row = kNoCell;
    if (cell.kind == ChainCell::Kind::Midpoint) {
      const CellImage& img = m.half_edge_map()[2 * cell.index];
      row = img.collapsed ? ct.row_of_vertex[img.index] : ct.row_of_edge[FatGraph::edge_of(img.index)];
    } else {
      row = ct.row_of_vertex[m.vertex_map()[cell.index]];
    }
    if (row != kNoCell) mc.map.f0.at(row, r) = 1;
  }
  (void)g0;
  if (!(ct.differential * mc.map.f1 == mc.map.f0 * cs.differential))
    fail(ErrorCode::InvalidMorphism, "induced maps do not commute with the differentials");
  return mc;
}

}  // namespace

ChainMap chain_map_of_morphism(const Morphism& m) {
  MorphismComplexes mc = build_chain_map(m);
  if (mc.source.rank_h1() != mc.target.rank_h1() || mc.source.rank_h0() != mc.target.rank_h0())
    fail(ErrorCode::InvalidMorphism, "homology ranks differ");
  return mc.map;
}

MorphismDeterminant morphism_determinant(const Morphism& m) {
  MorphismComplexes mc = build_chain_map(m);
  const auto& cs = mc.source;
  const auto& ct = mc.target;
  if (cs.rank_h1() != ct.rank_h1() || cs.rank_h0() != ct.rank_h0())
    fail(ErrorCode::InvalidMorphism, "homology ranks differ");
  const FatGraph& g0 = m.source().base();
  const std::size_t n1 = cs.rank_h1(), n0 = cs.rank_h0();

  MorphismDeterminant out;
  std::vector<Vector> cols;
  for (const auto& z : cs.h1_basis) cols.push_back(ct.h1_coordinates(mc.map.f1.apply(z)));
  out.forward_h1 = Matrix::from_columns(n1, cols);
  cols.clear();
  for (std::size_t r : cs.h0_basis) cols.push_back(ct.h0_coordinates(mc.map.f0.apply(unit(cs.basis0.size(), r))));
  out.forward_h0 = Matrix::from_columns(n0, cols);
  Rational f1 = determinant(out.forward_h1), f0 = determinant(out.forward_h0);
  if (sgn(f1) == 0 || sgn(f0) == 0) fail(ErrorCode::InvalidMorphism, "chain map is not a quasi-isomorphism");
  out.forward_sign = sgn(f1) * sgn(f0);

  // Section maps: each surviving cell goes back to its unique preimage and
  // a target vertex goes to the average of the extra cells of its fibre.
  std::vector<HalfEdgeId> preimage(m.target().base().half_edge_count(), kNoCell);
  for (HalfEdgeId h = 0; h < g0.half_edge_count(); ++h)
    if (!m.half_edge_map()[h].collapsed) preimage[m.half_edge_map()[h].index] = h;

  std::vector<std::size_t> tree_columns;
  for (std::size_t j = 0; j < cs.basis1.size(); ++j)
    if (m.half_edge_map()[cs.basis1[j]].collapsed) tree_columns.push_back(j);
  Matrix tree(cs.basis0.size(), tree_columns.size());
  for (std::size_t r = 0; r < cs.basis0.size(); ++r)
    for (std::size_t k = 0; k < tree_columns.size(); ++k) tree.at(r, k) = cs.differential.at(r, tree_columns[k]);

  cols.clear();
  for (const auto& z : ct.h1_basis) {
    Vector y(cs.basis1.size());
    for (std::size_t j = 0; j < ct.basis1.size(); ++j) {
      if (sgn(z[j]) == 0) continue;
      std::size_t col = cs.column_of_half_edge[preimage[ct.basis1[j]]];
      if (col == kNoCell) fail(ErrorCode::InvalidMorphism, "extra half-edge has an incoming preimage");
      y[col] += z[j];
    }
    Vector r = cs.differential.apply(y);
    for (auto& x : r) x = -x;
    auto fix = solve(tree, r);
    if (!fix) fail(ErrorCode::InvalidMorphism, "section of a cycle cannot be closed inside the collapsed trees");
    for (std::size_t k = 0; k < tree_columns.size(); ++k) y[tree_columns[k]] += (*fix)[k];
    cols.push_back(cs.h1_coordinates(y));
  }
  out.section_h1 = Matrix::from_columns(n1, cols);

  cols.clear();
  for (std::size_t r : ct.h0_basis) {
    Vector chain(cs.basis0.size());
    const ChainCell& cell = ct.basis0[r];
    if (cell.kind == ChainCell::Kind::Midpoint) {
      HalfEdgeId h = preimage[2 * cell.index];
      chain[cs.row_of_edge[FatGraph::edge_of(h)]] = 1;
    } else {
      std::vector<std::size_t> rows;
      for (VertexId v = 0; v < g0.vertex_count(); ++v)
        if (m.vertex_map()[v] == cell.index && cs.row_of_vertex[v] != kNoCell) rows.push_back(cs.row_of_vertex[v]);
      for (EdgeId e = 0; e < g0.edge_count(); ++e) {
        const CellImage& img = m.half_edge_map()[2 * e];
        if (img.collapsed && img.index == cell.index && cs.row_of_edge[e] != kNoCell) rows.push_back(cs.row_of_edge[e]);
      }
      if (rows.empty()) fail(ErrorCode::InvalidMorphism, "extra vertex has no extra preimage");
      Rational weight(1, static_cast<long>(rows.size()));
      weight.canonicalize();
      for (std::size_t row : rows) chain[row] = weight;
    }
    cols.push_back(cs.h0_coordinates(chain));
  }
  out.section_h0 = Matrix::from_columns(n0, cols);
  Rational g1 = determinant(out.section_h1), g0d = determinant(out.section_h0);
  if (sgn(g1) == 0 || sgn(g0d) == 0) fail(ErrorCode::InvalidMorphism, "section is not a quasi-isomorphism");
  out.section_sign = sgn(g1) * sgn(g0d);
  return out;
}

int morphism_det_sign(const Morphism& m) {
  MorphismDeterminant d = morphism_determinant(m);
  if (d.forward_sign != d.section_sign)
    fail(ErrorCode::Internal, "forward and section determinants disagree in sign");
  return d.forward_sign;
}

GluingDeterminant gluing_determinant(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2,
                                     const GluingMatch& match) {
  GluingDeterminant out;
  out.glued = glue(g1, g2, match);
  if (!out.glued.admissibility.admissible || !is_admissible(g1).admissible)
    fail(ErrorCode::NotGluable, "gluing determinant needs admissible graphs");
  out.left = relative_chain_complex(g1);
  out.right = relative_chain_complex(g2);
  out.glued_complex = relative_chain_complex(out.glued.graph);
  const auto& A = out.left;
  const auto& C = out.right;
  const auto& B = out.glued_complex;
  const auto& prov = out.glued.provenance;

  // Positions of the left and right cells inside the glued complex.
  auto columns_of = [&](const ChainComplexPair& X, const std::vector<HalfEdgeId>& hmap) {
    std::vector<std::size_t> cols;
    for (HalfEdgeId h : X.basis1) cols.push_back(B.column_of_half_edge[hmap[h]]);
    return cols;
  };
  auto rows_of = [&](const ChainComplexPair& X, const std::vector<HalfEdgeId>& hmap,
                     const std::vector<VertexId>& vmap) {
    std::vector<std::size_t> rows;
    for (const ChainCell& cell : X.basis0)
      rows.push_back(cell.kind == ChainCell::Kind::Midpoint ? B.row_of_edge[FatGraph::edge_of(hmap[2 * cell.index])]
                                                            : B.row_of_vertex[vmap[cell.index]]);
    return rows;
  };
  auto colA = columns_of(A, prov.left_half_edge), colC = columns_of(C, prov.right_half_edge);
  auto rowA = rows_of(A, prov.left_half_edge, prov.left_vertex);
  auto rowC = rows_of(C, prov.right_half_edge, prov.right_vertex);
  {
    std::vector<int> seen_c(B.basis1.size(), 0), seen_r(B.basis0.size(), 0);
    for (auto* v : {&colA, &colC})
      for (std::size_t c : *v) {
        if (c == kNoCell) fail(ErrorCode::Internal, "extra half-edge lost in gluing");
        ++seen_c[c];
      }
    for (auto* v : {&rowA, &rowC})
      for (std::size_t r : *v) {
        if (r == kNoCell) fail(ErrorCode::Internal, "extra 0-cell lost in gluing");
        ++seen_r[r];
      }
    for (int s : seen_c)
      if (s != 1) fail(ErrorCode::Internal, "glued 1-cells are not the union of the extra cells");
    for (int s : seen_r)
      if (s != 1) fail(ErrorCode::Internal, "glued 0-cells are not the union of the extra cells");
  }
  auto embed = [&](const Vector& x, const std::vector<std::size_t>& where, std::size_t dim) {
    Vector y(dim);
    for (std::size_t k = 0; k < x.size(); ++k) y[where[k]] = x[k];
    return y;
  };
  auto restrict = [&](const Vector& y, const std::vector<std::size_t>& where) {
    Vector x(where.size());
    for (std::size_t k = 0; k < where.size(); ++k) x[k] = y[where[k]];
    return x;
  };
  auto combine = [&](const std::vector<Vector>& basis, const Vector& coeffs, std::size_t dim) {
    Vector v(dim);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (sgn(coeffs[k]) != 0)
        for (std::size_t t = 0; t < dim; ++t) v[t] += coeffs[k] * basis[k][t];
    return v;
  };

  const std::size_t a0 = A.rank_h0(), c1 = C.rank_h1();
  // Connecting map H1(C) -> H0(A): push a C-cycle into B and read off its
  // boundary, which lives on A-cells.
  std::vector<Vector> delta_cols;
  for (const auto& z : C.h1_basis) {
    Vector bd = B.differential.apply(embed(z, colC, B.basis1.size()));
    if (!is_zero(restrict(bd, rowC))) fail(ErrorCode::Internal, "quotient differential mismatch");
    delta_cols.push_back(A.h0_coordinates(restrict(bd, rowA)));
  }
  Matrix delta = Matrix::from_columns(a0, delta_cols);
  Nullspace ker = nullspace(delta);
  std::vector<std::size_t> u = complete_with_units(c1, ker.basis);
  std::vector<Vector> m_cols = ker.basis;
  for (std::size_t j : u) m_cols.push_back(unit(c1, j));
  Rational det_m = det_of_columns(c1, m_cols);

  std::vector<Vector> n_cols;
  for (std::size_t j : u) n_cols.push_back(delta.apply(unit(c1, j)));
  std::vector<std::size_t> w = complete_with_units(a0, n_cols);
  for (std::size_t j : w) n_cols.push_back(unit(a0, j));
  Rational det_n = det_of_columns(a0, n_cols);

  for (const auto& z : A.h1_basis) out.image_h1.push_back(embed(z, colA, B.basis1.size()));
  for (const auto& k : ker.basis) {
    Vector z = combine(C.h1_basis, k, C.basis1.size());
    Vector y = embed(z, colC, B.basis1.size());
    auto x = solve(A.differential, restrict(B.differential.apply(y), rowA));
    if (!x) fail(ErrorCode::Internal, "kernel class of the connecting map does not lift");
    Vector lift_a = embed(*x, colA, B.basis1.size());
    for (std::size_t t = 0; t < y.size(); ++t) y[t] -= lift_a[t];
    out.image_h1.push_back(std::move(y));
  }
  for (std::size_t j : w) {
    Vector chain(A.basis0.size());
    chain[A.h0_basis[j]] = 1;
    out.image_h0.push_back(embed(chain, rowA, B.basis0.size()));
  }
  for (std::size_t r : C.h0_basis) out.image_h0.push_back(unit(B.basis0.size(), rowC[r]));

  std::vector<Vector> p_cols, q_cols;
  for (const auto& z : out.image_h1) p_cols.push_back(B.h1_coordinates(z));
  for (const auto& c : out.image_h0) q_cols.push_back(B.h0_coordinates(c));
  Rational det_p = det_of_columns(B.rank_h1(), p_cols);
  Rational det_q = det_of_columns(B.rank_h0(), q_cols);
  if (sgn(det_m) == 0 || sgn(det_n) == 0 || sgn(det_p) == 0 || sgn(det_q) == 0)
    fail(ErrorCode::Internal, "long exact sequence did not produce bases");
  out.scalar = det_n / det_m * det_p / det_q;
  return out;
}

GradedLine gluing_det_iso(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2, const GluingMatch& match,
                          int d) {
  if (d < 0) fail(ErrorCode::InvalidArgument, "tensor power must be nonnegative");
  GluingDeterminant gd = gluing_determinant(g1, g2, match);
  std::int64_t deg = gd.left.euler_characteristic() + gd.right.euler_characteristic();
  if (deg != gd.glued_complex.euler_characteristic())
    fail(ErrorCode::Internal, "relative Euler characteristic is not additive");
  return power(GradedLine{deg, gd.scalar}, d);
}

Vector incoming_boundary(const ChainComplexPair& c, const OpenClosedFatGraph& g, const Vector& cycle) {
  const FatGraph& base = g.base();
  std::vector<std::size_t> owner(base.vertex_count(), kNoCell);
  for (std::size_t k = 0; k < c.partition.v_in.size(); ++k) owner[c.partition.v_in[k]] = c.partition.in_owner[k];
  Vector out(g.in_leaves().size());
  for (std::size_t j = 0; j < c.basis1.size(); ++j) {
    if (sgn(cycle[j]) == 0) continue;
    VertexId s = base.source(c.basis1[j]);
    if (owner[s] != kNoCell) out[owner[s]] -= cycle[j];
  }
  return out;
}

namespace {

// Plucker coordinates of the boundary images of two framed H1 classes.
struct Bracketing {
  OpenClosedFatGraph glued;
  Vector plucker;
};

Bracketing bracket(const OpenClosedFatGraph& left, std::size_t pants_second_in) {
  OpenClosedFatGraph pants = pants_graph();
  SubdivisionMatch sm = subdivision_match(left, pants);
  GluingDeterminant gd = gluing_determinant(sm.left, sm.right, sm.match);
  if (gd.left.rank_h1() != 1 || gd.right.rank_h1() != 1 || gd.image_h1.size() != 2)
    fail(ErrorCode::Internal, "unexpected homology in the associativity check");
  // Orient each pants class to run from its first incoming circle to its second.
  Vector bl = incoming_boundary(gd.left, sm.left, gd.left.h1_basis[0]);
  Vector br = incoming_boundary(gd.right, sm.right, gd.right.h1_basis[0]);
  int sl = sgn(bl[pants_second_in]), sr = sgn(br[1]);
  if (sl == 0 || sr == 0) fail(ErrorCode::Internal, "pants class does not reach its second circle");

  const OpenClosedFatGraph& glued = gd.glued.graph;
  Vector x = incoming_boundary(gd.glued_complex, glued, gd.image_h1[0]);
  Vector y = incoming_boundary(gd.glued_complex, glued, gd.image_h1[1]);
  Bracketing b{glued, {}};
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) b.plucker.push_back(sl * sr * (x[i] * y[j] - x[j] * y[i]));
  return b;
}

}  // namespace

SkewAssociativity skew_associativity(int d) {
  if (d < 0) fail(ErrorCode::InvalidArgument, "dimension must be nonnegative");
  OpenClosedFatGraph pants = pants_graph();
  OpenClosedFatGraph cyl = cylinder_graph();
  Bracketing first = bracket(disjoint_union(pants, cyl).graph, 1);
  Bracketing second = bracket(disjoint_union(cyl, pants).graph, 2);

  std::size_t k = 0;
  while (k < second.plucker.size() && sgn(second.plucker[k]) == 0) ++k;
  if (k == second.plucker.size()) fail(ErrorCode::Internal, "degenerate frame");
  Rational ratio = first.plucker[k] / second.plucker[k];
  for (std::size_t i = 0; i < first.plucker.size(); ++i)
    if (first.plucker[i] != ratio * second.plucker[i]) fail(ErrorCode::Internal, "bracketings are not proportional");

  SkewAssociativity out;
  out.ratio = ratio;
  out.sign = (sgn(ratio) < 0 && d % 2 != 0) ? -1 : 1;
  out.first = std::move(first.glued);
  out.second = std::move(second.glued);
  return out;
}

int skew_associativity_sign(int d) { return skew_associativity(d).sign; }

}  // namespace fatcob
