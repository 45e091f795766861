#include "fatcob/morphism.hpp"

#include <algorithm>
#include <set>

#include "fatcob/error.hpp"
#include "union_find.hpp"

namespace fatcob {

Morphism::Morphism(OpenClosedFatGraph source, OpenClosedFatGraph target, std::vector<VertexId> vertex_map,
                   std::vector<CellImage> half_edge_map)
    : Morphism(std::make_shared<const OpenClosedFatGraph>(std::move(source)),
               std::make_shared<const OpenClosedFatGraph>(std::move(target)), std::move(vertex_map),
               std::move(half_edge_map)) {}

Morphism::Morphism(std::shared_ptr<const OpenClosedFatGraph> source,
                   std::shared_ptr<const OpenClosedFatGraph> target, std::vector<VertexId> vertex_map,
                   std::vector<CellImage> half_edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      half_edge_map_(std::move(half_edge_map)) {}

Morphism Morphism::identity(const OpenClosedFatGraph& g) {
  auto shared = std::make_shared<const OpenClosedFatGraph>(g);
  std::vector<VertexId> vmap(g.base().vertex_count());
  for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = v;
  std::vector<CellImage> hmap(g.base().half_edge_count());
  for (HalfEdgeId h = 0; h < hmap.size(); ++h) hmap[h] = CellImage::half_edge(h);
  return Morphism(shared, shared, std::move(vmap), std::move(hmap));
}

bool Morphism::operator==(const Morphism& other) const {
  return vertex_map_ == other.vertex_map_ && half_edge_map_ == other.half_edge_map_ &&
         (source_ == other.source_ || *source_ == *other.source_) &&
         (target_ == other.target_ || *target_ == *other.target_);
}

const char* clause_name(MorphismClause c) {
  switch (c) {
    case MorphismClause::Shape: return "shape";
    case MorphismClause::SourceCommutes: return "commutes with source";
    case MorphismClause::InvolutionCommutes: return "commutes with involution";
    case MorphismClause::Surjective: return "surjective";
    case MorphismClause::UniquePreimage: return "unique half-edge preimage";
    case MorphismClause::TreePreimage: return "vertex preimage is a tree";
    case MorphismClause::BoundaryCycles: return "boundary cycles preserved";
    case MorphismClause::Decorations: return "decorations preserved";
  }
  return "unknown";
}

std::string MorphismWitness::describe() const {
  std::string s = clause_name(clause);
  if (!cell.empty()) s += " fails at '" + cell + "'";
  return s;
}

MorphismReport validate_morphism(const Morphism& m) {
  const OpenClosedFatGraph& src = m.source();
  const OpenClosedFatGraph& tgt = m.target();
  const FatGraph& g0 = src.base();
  const FatGraph& g1 = tgt.base();
  const auto& vmap = m.vertex_map();
  const auto& hmap = m.half_edge_map();
  MorphismReport report;
  auto reject = [&](MorphismClause clause, std::string cell) {
    report.valid = false;
    report.witness = MorphismWitness{clause, std::move(cell)};
    return report;
  };

  if (vmap.size() != g0.vertex_count() || hmap.size() != g0.half_edge_count())
    return reject(MorphismClause::Shape, "");
  for (VertexId v = 0; v < vmap.size(); ++v)
    if (vmap[v] >= g1.vertex_count()) return reject(MorphismClause::Shape, g0.vertex_name(v));
  for (HalfEdgeId h = 0; h < hmap.size(); ++h) {
    std::size_t bound = hmap[h].collapsed ? g1.vertex_count() : g1.half_edge_count();
    if (hmap[h].index >= bound) return reject(MorphismClause::Shape, g0.half_edge_name(h));
  }

  for (HalfEdgeId h = 0; h < hmap.size(); ++h) {
    const CellImage& img = hmap[h];
    VertexId fs = vmap[g0.source(h)];
    if (img.collapsed ? img.index != fs : g1.source(img.index) != fs)
      return reject(MorphismClause::SourceCommutes, g0.half_edge_name(h));
    const CellImage& twin = hmap[FatGraph::involution(h)];
    CellImage expected = img.collapsed ? img : CellImage::half_edge(FatGraph::involution(img.index));
    if (!(twin == expected)) return reject(MorphismClause::InvolutionCommutes, g0.half_edge_name(h));
  }

  std::vector<bool> vhit(g1.vertex_count(), false);
  for (VertexId v : vmap) vhit[v] = true;
  for (VertexId v = 0; v < g1.vertex_count(); ++v)
    if (!vhit[v]) return reject(MorphismClause::Surjective, g1.vertex_name(v));
  std::vector<HalfEdgeId> preimage(g1.half_edge_count(), kNoCell);
  for (HalfEdgeId h = 0; h < hmap.size(); ++h) {
    if (hmap[h].collapsed) continue;
    if (preimage[hmap[h].index] != kNoCell)
      return reject(MorphismClause::UniquePreimage, g1.half_edge_name(hmap[h].index));
    preimage[hmap[h].index] = h;
  }
  for (HalfEdgeId h = 0; h < g1.half_edge_count(); ++h)
    if (preimage[h] == kNoCell) return reject(MorphismClause::Surjective, g1.half_edge_name(h));

  // Each fibre, with the edges collapsed into it, must be a tree.
  UnionFind uf(g0.vertex_count());
  for (HalfEdgeId h = 0; h < hmap.size(); h += 2) {
    if (!hmap[h].collapsed) continue;
    if (!uf.unite(g0.source(h), g0.source(h + 1)))
      return reject(MorphismClause::TreePreimage, g1.vertex_name(hmap[h].index));
  }
  std::vector<VertexId> fibre_root(g1.vertex_count(), kNoCell);
  for (VertexId v = 0; v < g0.vertex_count(); ++v) {
    std::size_t r = uf.find(v);
    if (fibre_root[vmap[v]] == kNoCell) fibre_root[vmap[v]] = r;
    else if (fibre_root[vmap[v]] != r) return reject(MorphismClause::TreePreimage, g1.vertex_name(vmap[v]));
  }

  for (HalfEdgeId h1 = 0; h1 < g1.half_edge_count(); ++h1) {
    HalfEdgeId x = g0.omega(preimage[h1]);
    std::size_t steps = 0;
    while (hmap[x].collapsed && steps++ <= g0.half_edge_count()) x = g0.omega(x);
    if (hmap[x].collapsed || hmap[x].index != g1.omega(h1))
      return reject(MorphismClause::BoundaryCycles, g1.half_edge_name(h1));
  }

  auto push = [&](const std::vector<VertexId>& list) {
    std::vector<VertexId> out;
    for (VertexId v : list) out.push_back(vmap[v]);
    return out;
  };
  if (push(src.in_leaves()) != tgt.in_leaves()) return reject(MorphismClause::Decorations, "in");
  if (push(src.out_leaves()) != tgt.out_leaves()) return reject(MorphismClause::Decorations, "out");
  auto closed = push(src.closed_leaves());
  std::sort(closed.begin(), closed.end());
  if (closed != tgt.closed_leaves()) return reject(MorphismClause::Decorations, "closed");
  return report;
}

Collapse collapse_edges(const OpenClosedFatGraph& g, const std::vector<EdgeId>& forest) {
  const FatGraph& base = g.base();
  std::vector<bool> collapsed(base.edge_count(), false);
  UnionFind uf(base.vertex_count());
  std::set<VertexId> special(g.in_leaves().begin(), g.in_leaves().end());
  special.insert(g.out_leaves().begin(), g.out_leaves().end());
  for (EdgeId e : forest) {
    if (e >= base.edge_count()) fail(ErrorCode::UnknownEdge, "edge index " + std::to_string(e) + " out of range");
    if (collapsed[e]) continue;
    collapsed[e] = true;
    VertexId a = base.source(2 * e), b = base.source(2 * e + 1);
    if (special.count(a) || special.count(b))
      fail(ErrorCode::DecorationDestroyed, "edge '" + base.edge_name(e) + "' ends at a special leaf");
    if (!uf.unite(a, b)) fail(ErrorCode::ForestContainsCycle, "edge '" + base.edge_name(e) + "' closes a cycle");
  }

  // Union-find roots are component minima, which carry the smallest names.
  std::vector<VertexId> new_vertex(base.vertex_count(), kNoCell);
  std::vector<std::string> vnames;
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    if (uf.find(v) != v) continue;
    new_vertex[v] = vnames.size();
    vnames.push_back(base.vertex_name(v));
  }
  std::vector<VertexId> vmap(base.vertex_count());
  for (VertexId v = 0; v < base.vertex_count(); ++v) vmap[v] = new_vertex[uf.find(v)];

  std::vector<std::string> enames;
  std::vector<HalfEdgeId> hnew(base.half_edge_count(), kNoCell);
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    if (collapsed[e]) continue;
    hnew[2 * e] = 2 * enames.size();
    hnew[2 * e + 1] = 2 * enames.size() + 1;
    enames.push_back(base.edge_name(e));
  }
  std::vector<VertexId> source(2 * enames.size());
  std::vector<HalfEdgeId> sigma(2 * enames.size());
  std::vector<std::size_t> valence(vnames.size(), 0);
  for (HalfEdgeId h = 0; h < base.half_edge_count(); ++h) {
    if (hnew[h] == kNoCell) continue;
    HalfEdgeId n = base.sigma(h);
    while (hnew[n] == kNoCell) n = base.sigma(FatGraph::involution(n));
    source[hnew[h]] = vmap[base.source(h)];
    sigma[hnew[h]] = hnew[n];
    ++valence[vmap[base.source(h)]];
  }
  std::vector<bool> isolated(vnames.size());
  for (VertexId v = 0; v < vnames.size(); ++v) isolated[v] = valence[v] == 0;

  auto a = FatGraph::assemble_with_map(std::move(vnames), std::move(isolated), std::move(enames), source, sigma);
  for (auto& v : vmap) v = a.vertex_index[v];
  std::vector<CellImage> hmap(base.half_edge_count());
  for (HalfEdgeId h = 0; h < base.half_edge_count(); ++h)
    hmap[h] = hnew[h] == kNoCell ? CellImage::vertex(vmap[base.source(h)]) : CellImage::half_edge(a.half_edge_index[hnew[h]]);

  OpenClosedFatGraph target;
  try {
    target = transport_decorations(g, std::move(a.graph), vmap);
  } catch (const Error& e) {
    fail(ErrorCode::DecorationDestroyed, e.detail());
  }
  Morphism m(g, target, std::move(vmap), std::move(hmap));
  auto report = validate_morphism(m);
  if (!report.valid) fail(ErrorCode::DecorationDestroyed, report.witness->describe());
  return Collapse{std::move(target), std::move(m)};
}

Collapse collapse_edges(const FatGraph& g, const std::vector<EdgeId>& forest) {
  return collapse_edges(OpenClosedFatGraph(g), forest);
}

Morphism compose(const Morphism& m2, const Morphism& m1) {
  if (m1.target_ptr() != m2.source_ptr() && !(m1.target() == m2.source()))
    fail(ErrorCode::Mismatch, "target of the first morphism is not the source of the second");
  std::vector<VertexId> vmap(m1.vertex_map().size());
  for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = m2.vertex_map()[m1.vertex_map()[v]];
  std::vector<CellImage> hmap(m1.half_edge_map().size());
  for (HalfEdgeId h = 0; h < hmap.size(); ++h) {
    const CellImage& mid = m1.half_edge_map()[h];
    hmap[h] = mid.collapsed ? CellImage::vertex(m2.vertex_map()[mid.index]) : m2.half_edge_map()[mid.index];
  }
  return Morphism(m1.source_ptr(), m2.target_ptr(), std::move(vmap), std::move(hmap));
}

}  // namespace fatcob
