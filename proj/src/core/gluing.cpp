#include "fatcob/gluing.hpp"

#include <algorithm>
#include <set>

#include "fatcob/error.hpp"

namespace fatcob {

namespace {

std::vector<HalfEdgeId> out_cycle_edges(const FatGraph& g, VertexId leaf) {
  auto cycle = anchored_leaf_cycle(g, leaf);
  return std::vector<HalfEdgeId>(cycle.begin() + 2, cycle.end());
}

// Builds the match without comparing edge counts; mismatches are reported
// by the caller.
GluingMatch raw_match(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2) {
  const auto& outs = g1.out_leaves();
  const auto& ins = g2.in_leaves();
  if (outs.size() != ins.size())
    fail(ErrorCode::SignatureMismatch, "left graph has " + std::to_string(outs.size()) +
                                           " outgoing boundaries, right graph has " + std::to_string(ins.size()) +
                                           " incoming");
  for (std::size_t j = 0; j < outs.size(); ++j)
    if (g1.is_closed(outs[j]) != g2.is_closed(ins[j]))
      fail(ErrorCode::SignatureMismatch, "pair " + std::to_string(j) + " matches a circle with an interval");
  auto adm = is_admissible(g2);
  if (!adm.admissible) fail(ErrorCode::NotAdmissible, adm.witness->describe(g2.base()));

  auto circles = incoming_circles(g2);
  GluingMatch m;
  for (std::size_t j = 0; j < outs.size(); ++j) {
    GluingPair p;
    p.index = j;
    p.out_leaf = outs[j];
    p.in_leaf = ins[j];
    if (g1.is_closed(outs[j])) {
      p.kind = OneManifold::Circle;
      p.alignment.out_cycle = out_cycle_edges(g1.base(), outs[j]);
      for (const auto& c : circles)
        if (c.leaf == ins[j]) p.alignment.in_circle = c.circle;
    }
    m.pairs.push_back(std::move(p));
  }
  return m;
}

}  // namespace

GluingMatch gluable(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2) {
  GluingMatch m = raw_match(g1, g2);
  std::optional<EdgeCountMismatchError> first;
  std::string report;
  for (const auto& p : m.pairs) {
    if (p.kind != OneManifold::Circle) continue;
    std::size_t k1 = p.alignment.out_cycle.size(), k2 = p.alignment.in_circle.size();
    if (k1 == k2) continue;
    EdgeCountMismatchError e(p.index, k1, k2);
    if (!first) first = e;
    if (!report.empty()) report += "; ";
    report += e.detail();
  }
  if (first) {
    if (report != first->detail()) throw Error(ErrorCode::EdgeCountMismatch, report);
    throw *first;
  }
  return m;
}

SubdivisionMatch subdivision_match(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2) {
  SubdivisionMatch out;
  out.left = g1;
  out.right = g2;
  GluingMatch m = raw_match(g1, g2);
  std::vector<std::string> out_names, in_names;
  for (const auto& p : m.pairs) {
    out_names.push_back(g1.base().vertex_name(p.out_leaf));
    in_names.push_back(g2.base().vertex_name(p.in_leaf));
  }
  std::vector<std::size_t> left_cursor(m.pairs.size(), 0), right_cursor(m.pairs.size(), 0);

  auto subdivide_left = [&](std::size_t j) {
    const FatGraph& g = out.left.base();
    auto cycle = out_cycle_edges(g, *g.find_vertex(out_names[j]));
    std::vector<std::size_t> single;
    for (std::size_t t = 0; t < cycle.size(); ++t)
      if (std::find(cycle.begin(), cycle.end(), FatGraph::involution(cycle[t])) == cycle.end()) single.push_back(t);
    std::size_t t;
    if (single.empty()) {
      t = 0;
    } else {
      auto it = std::lower_bound(single.begin(), single.end(), left_cursor[j] % cycle.size());
      t = it == single.end() ? single.front() : *it;
    }
    left_cursor[j] = t + 2;
    out.left = subdivide_edge(out.left, FatGraph::edge_of(cycle[t])).graph;
    ++out.left_subdivisions;
  };
  auto subdivide_right = [&](std::size_t j) {
    const FatGraph& g = out.right.base();
    VertexId leaf = *g.find_vertex(in_names[j]);
    std::vector<HalfEdgeId> circle;
    for (const auto& c : incoming_circles(out.right))
      if (c.leaf == leaf) circle = c.circle;
    std::size_t t = right_cursor[j] % circle.size();
    right_cursor[j] = t + 2;
    out.right = subdivide_edge(out.right, FatGraph::edge_of(circle[t])).graph;
    ++out.right_subdivisions;
  };

  // Left subdivisions can lengthen other outgoing cycles sharing the edge,
  // so loop until every pair agrees; right circles are disjoint.
  for (bool changed = true; changed;) {
    changed = false;
    GluingMatch cur = raw_match(out.left, out.right);
    for (const auto& p : cur.pairs) {
      if (p.kind != OneManifold::Circle) continue;
      std::size_t k1 = p.alignment.out_cycle.size(), k2 = p.alignment.in_circle.size();
      if (k1 == k2) continue;
      const FatGraph& g = out.left.base();
      bool has_single = false;
      for (HalfEdgeId a : p.alignment.out_cycle)
        if (std::find(p.alignment.out_cycle.begin(), p.alignment.out_cycle.end(), FatGraph::involution(a)) ==
            p.alignment.out_cycle.end())
          has_single = true;
      (void)g;
      if (k1 < k2 && (has_single || k2 - k1 >= 2)) subdivide_left(p.index);
      else subdivide_right(p.index);
      changed = true;
      break;
    }
  }
  out.match = gluable(out.left, out.right);
  return out;
}

Glued glue(const OpenClosedFatGraph& g1, const OpenClosedFatGraph& g2, const GluingMatch& match) {
  GluingMatch expected;
  try {
    expected = gluable(g1, g2);
  } catch (const Error& e) {
    fail(ErrorCode::InvalidMatch, e.detail());
  }
  if (!(expected == match)) fail(ErrorCode::InvalidMatch, "match does not describe these graphs");

  const FatGraph& a = g1.base();
  const FatGraph& b = g2.base();
  IncomingPartition part = incoming_partition(g2);

  std::set<std::string> taken(a.vertex_names().begin(), a.vertex_names().end());
  taken.insert(a.edge_names().begin(), a.edge_names().end());
  taken.insert(b.vertex_names().begin(), b.vertex_names().end());
  taken.insert(b.edge_names().begin(), b.edge_names().end());
  std::set<std::string> left_names(a.vertex_names().begin(), a.vertex_names().end());
  left_names.insert(a.edge_names().begin(), a.edge_names().end());
  auto rename = [&](const std::string& n) {
    if (!left_names.count(n)) return n;
    std::string fresh = fresh_name(n, taken);
    taken.insert(fresh);
    return fresh;
  };

  std::vector<std::string> vnames = a.vertex_names();
  std::vector<bool> isolated(a.vertex_count());
  for (VertexId v = 0; v < a.vertex_count(); ++v) isolated[v] = a.is_isolated(v);
  std::vector<std::string> enames = a.edge_names();
  std::vector<VertexId> source = a.source_map();
  std::vector<HalfEdgeId> sigma = a.sigma_map();

  std::vector<VertexId> rv(b.vertex_count(), kNoCell);
  for (VertexId v : part.e_v) {
    rv[v] = vnames.size();
    vnames.push_back(rename(b.vertex_name(v)));
    isolated.push_back(b.is_isolated(v));
  }
  std::vector<HalfEdgeId> rh(b.half_edge_count(), kNoCell);
  for (EdgeId e : part.e_e) {
    rh[2 * e] = 2 * enames.size();
    rh[2 * e + 1] = 2 * enames.size() + 1;
    enames.push_back(rename(b.edge_name(e)));
  }
  std::size_t interval_pairs = 0;
  for (const auto& p : match.pairs) {
    if (p.kind == OneManifold::Circle) {
      const auto& al = p.alignment;
      for (std::size_t i = 0; i < al.k(); ++i) {
        HalfEdgeId partner_rev = FatGraph::involution(al.out_cycle[al.partner(i)]);
        rv[b.source(al.in_circle[i])] = a.source(partner_rev);
        rh[al.in_circle[i]] = partner_rev;
        rh[FatGraph::involution(al.in_circle[i])] = al.out_cycle[al.partner(i)];
      }
    } else {
      rv[p.in_leaf] = p.out_leaf;
      ++interval_pairs;
    }
  }

  source.resize(2 * enames.size());
  sigma.resize(2 * enames.size());
  for (EdgeId e : part.e_e)
    for (HalfEdgeId h : {2 * e, 2 * e + 1}) {
      source[rh[h]] = rv[b.source(h)];
      sigma[rh[h]] = part.half_edge_in[b.sigma(h)] ? kNoCell : rh[b.sigma(h)];
    }

  for (const auto& p : match.pairs) {
    if (p.kind == OneManifold::Circle) {
      // The extra half-edges X1..Xm that follow B_i at its vertex go right
      // after the reverse of its partner A.
      const auto& al = p.alignment;
      for (std::size_t i = 0; i < al.k(); ++i) {
        HalfEdgeId bi = al.in_circle[i];
        HalfEdgeId stop = FatGraph::involution(al.in_circle[(i + al.k() - 1) % al.k()]);
        std::vector<HalfEdgeId> xs;
        for (HalfEdgeId x = b.sigma(bi); x != stop; x = b.sigma(x)) xs.push_back(rh[x]);
        if (xs.empty()) continue;
        HalfEdgeId anchor = FatGraph::involution(al.out_cycle[al.partner(i)]);
        HalfEdgeId after = sigma[anchor];
        sigma[anchor] = xs.front();
        for (std::size_t t = 0; t + 1 < xs.size(); ++t) sigma[xs[t]] = xs[t + 1];
        sigma[xs.back()] = after;
      }
    } else {
      HalfEdgeId left_leaf = a.rotation(p.out_leaf)[0];
      HalfEdgeId right_leaf = rh[b.rotation(p.in_leaf)[0]];
      sigma[left_leaf] = right_leaf;
      sigma[right_leaf] = left_leaf;
    }
  }
  for (HalfEdgeId h = 0; h < sigma.size(); ++h)
    if (sigma[h] == kNoCell) fail(ErrorCode::Internal, "glued cyclic order left a gap");

  auto asm_ = FatGraph::assemble_with_map(std::move(vnames), std::move(isolated), std::move(enames), source, sigma);
  Glued out;
  out.interval_pairs = interval_pairs;
  auto& prov = out.provenance;
  prov.left_vertex.assign(asm_.vertex_index.begin(), asm_.vertex_index.begin() + static_cast<std::ptrdiff_t>(a.vertex_count()));
  prov.left_half_edge.assign(asm_.half_edge_index.begin(),
                             asm_.half_edge_index.begin() + static_cast<std::ptrdiff_t>(a.half_edge_count()));
  prov.right_vertex.resize(b.vertex_count());
  for (VertexId v = 0; v < b.vertex_count(); ++v) prov.right_vertex[v] = rv[v] == kNoCell ? kNoCell : asm_.vertex_index[rv[v]];
  prov.right_half_edge.resize(b.half_edge_count());
  for (HalfEdgeId h = 0; h < b.half_edge_count(); ++h)
    prov.right_half_edge[h] = rh[h] == kNoCell ? kNoCell : asm_.half_edge_index[rh[h]];

  std::vector<VertexId> in, outs, closed;
  for (VertexId v : g1.in_leaves()) {
    in.push_back(prov.left_vertex[v]);
    if (g1.is_closed(v)) closed.push_back(prov.left_vertex[v]);
  }
  for (VertexId v : g2.out_leaves()) {
    outs.push_back(prov.right_vertex[v]);
    if (g2.is_closed(v)) closed.push_back(prov.right_vertex[v]);
  }
  try {
    out.graph = decorate(std::move(asm_.graph), std::move(in), std::move(outs), std::move(closed));
  } catch (const Error& e) {
    fail(ErrorCode::Internal, "glued graph failed validation: " + e.detail());
  }
  out.admissibility = is_admissible(out.graph);
  return out;
}

Morphism glue_morphisms(const Morphism& m1, const Morphism& m2) {
  for (const Morphism* m : {&m1, &m2}) {
    auto r = validate_morphism(*m);
    if (!r.valid) fail(ErrorCode::InvalidMorphism, r.witness->describe());
  }
  GluingMatch ms = gluable(m1.source(), m2.source());
  for (const auto& p : ms.pairs) {
    if (p.kind != OneManifold::Circle) continue;
    const auto& al = p.alignment;
    for (std::size_t i = 0; i < al.k(); ++i) {
      bool right = m2.collapses(al.in_circle[i]);
      bool left = m1.collapses(al.out_cycle[al.partner(i)]);
      if (left != right)
        fail(ErrorCode::NotGluablePairMorphism,
             "'" + m2.source().base().half_edge_name(al.in_circle[i]) + (right ? "' collapses" : "' survives") +
                 " but its partner '" + m1.source().base().half_edge_name(al.out_cycle[al.partner(i)]) +
                 (left ? "' collapses" : "' survives"));
    }
  }
  GluingMatch mt = gluable(m1.target(), m2.target());
  Glued gs = glue(m1.source(), m2.source(), ms);
  Glued gt = glue(m1.target(), m2.target(), mt);

  const FatGraph& s1 = m1.source().base();
  const FatGraph& s2 = m2.source().base();
  const FatGraph& glued = gs.graph.base();
  std::vector<VertexId> vmap(glued.vertex_count(), kNoCell);
  std::vector<CellImage> hmap(glued.half_edge_count());
  std::vector<bool> hset(glued.half_edge_count(), false);

  auto right_image = [&](const CellImage& img) {
    return img.collapsed ? CellImage::vertex(gt.provenance.right_vertex[img.index])
                         : CellImage::half_edge(gt.provenance.right_half_edge[img.index]);
  };
  for (VertexId v = 0; v < s1.vertex_count(); ++v)
    vmap[gs.provenance.left_vertex[v]] = gt.provenance.left_vertex[m1.vertex_map()[v]];
  for (HalfEdgeId h = 0; h < s1.half_edge_count(); ++h) {
    const CellImage& img = m1.half_edge_map()[h];
    HalfEdgeId g = gs.provenance.left_half_edge[h];
    hmap[g] = img.collapsed ? CellImage::vertex(gt.provenance.left_vertex[img.index])
                            : CellImage::half_edge(gt.provenance.left_half_edge[img.index]);
    hset[g] = true;
  }
  for (VertexId v = 0; v < s2.vertex_count(); ++v) {
    VertexId g = gs.provenance.right_vertex[v];
    if (g == kNoCell || vmap[g] != kNoCell) continue;
    vmap[g] = gt.provenance.right_vertex[m2.vertex_map()[v]];
  }
  for (HalfEdgeId h = 0; h < s2.half_edge_count(); ++h) {
    HalfEdgeId g = gs.provenance.right_half_edge[h];
    if (g == kNoCell || hset[g]) continue;
    hmap[g] = right_image(m2.half_edge_map()[h]);
    hset[g] = true;
  }
  for (VertexId v = 0; v < vmap.size(); ++v)
    if (vmap[v] == kNoCell) fail(ErrorCode::Internal, "glued morphism misses a vertex");
  Morphism m(gs.graph, gt.graph, std::move(vmap), std::move(hmap));
  auto r = validate_morphism(m);
  if (!r.valid) fail(ErrorCode::Internal, "glued morphism is invalid: " + r.witness->describe());
  return m;
}

}  // namespace fatcob
