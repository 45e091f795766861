#include "fatcob/open_closed.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "fatcob/error.hpp"

namespace fatcob {

OpenClosedFatGraph::OpenClosedFatGraph(FatGraph g) : base_(std::move(g)) {}

LeafRole OpenClosedFatGraph::role(VertexId v) const {
  if (std::find(in_.begin(), in_.end(), v) != in_.end()) return LeafRole::In;
  if (std::find(out_.begin(), out_.end(), v) != out_.end()) return LeafRole::Out;
  return LeafRole::None;
}

bool OpenClosedFatGraph::is_closed(VertexId v) const {
  return std::binary_search(closed_.begin(), closed_.end(), v);
}

std::size_t OpenClosedFatGraph::role_index(VertexId v) const {
  auto i = std::find(in_.begin(), in_.end(), v);
  if (i != in_.end()) return static_cast<std::size_t>(i - in_.begin());
  auto o = std::find(out_.begin(), out_.end(), v);
  if (o != out_.end()) return static_cast<std::size_t>(o - out_.begin());
  return kNoCell;
}

bool OpenClosedFatGraph::operator==(const OpenClosedFatGraph& other) const {
  return base_ == other.base_ && in_ == other.in_ && out_ == other.out_ && closed_ == other.closed_;
}

HalfEdgeId leaf_half_edge(const FatGraph& g, VertexId leaf) {
  if (leaf >= g.vertex_count() || g.valence(leaf) != 1)
    fail(ErrorCode::NotALeaf, "vertex is not a leaf");
  return g.rotation(leaf)[0];
}

std::vector<HalfEdgeId> anchored_leaf_cycle(const FatGraph& g, VertexId leaf) {
  const HalfEdgeId attach = FatGraph::involution(leaf_half_edge(g, leaf));
  std::vector<HalfEdgeId> cycle;
  HalfEdgeId x = attach;
  do {
    cycle.push_back(x);
    x = g.omega(x);
  } while (x != attach);
  return cycle;
}

OpenClosedFatGraph decorate(FatGraph g, std::vector<VertexId> in_leaves, std::vector<VertexId> out_leaves,
                            std::vector<VertexId> closed) {
  auto name_of = [&](VertexId v) { return v < g.vertex_count() ? g.vertex_name(v) : std::to_string(v); };
  std::set<VertexId> ins, outs;
  for (VertexId v : in_leaves) {
    if (v >= g.vertex_count()) fail(ErrorCode::UnknownName, "incoming leaf index out of range");
    if (!ins.insert(v).second) fail(ErrorCode::DuplicateName, "'" + name_of(v) + "' listed twice as incoming");
  }
  for (VertexId v : out_leaves) {
    if (v >= g.vertex_count()) fail(ErrorCode::UnknownName, "outgoing leaf index out of range");
    if (!outs.insert(v).second) fail(ErrorCode::DuplicateName, "'" + name_of(v) + "' listed twice as outgoing");
    if (ins.count(v)) fail(ErrorCode::InOutOverlap, "'" + name_of(v) + "' is both incoming and outgoing");
  }
  for (VertexId v : ins)
    if (g.valence(v) != 1) fail(ErrorCode::NotALeaf, "incoming vertex '" + name_of(v) + "' is not a leaf");
  for (VertexId v : outs)
    if (g.valence(v) != 1) fail(ErrorCode::NotALeaf, "outgoing vertex '" + name_of(v) + "' is not a leaf");
  std::sort(closed.begin(), closed.end());
  if (std::adjacent_find(closed.begin(), closed.end()) != closed.end())
    fail(ErrorCode::DuplicateName, "closed leaf listed twice");
  for (VertexId v : closed)
    if (!ins.count(v) && !outs.count(v))
      fail(ErrorCode::ClosedNotSpecial, "closed vertex '" + name_of(v) + "' is neither incoming nor outgoing");

  BoundaryCycles bc = boundary_cycles(g);
  std::vector<int> specials(bc.cycles.size(), 0);
  for (VertexId v : ins) ++specials[bc.half_edge_to_cycle[g.rotation(v)[0]]];
  for (VertexId v : outs) ++specials[bc.half_edge_to_cycle[g.rotation(v)[0]]];
  for (VertexId v : closed)
    if (specials[bc.half_edge_to_cycle[g.rotation(v)[0]]] > 1)
      fail(ErrorCode::ClosedSharesCycle,
           "closed leaf '" + name_of(v) + "' shares its boundary cycle with another special leaf");

  OpenClosedFatGraph out(std::move(g));
  out.in_ = std::move(in_leaves);
  out.out_ = std::move(out_leaves);
  out.closed_ = std::move(closed);
  return out;
}

OpenClosedFatGraph decorate(FatGraph g, const std::vector<std::string>& in_leaves,
                            const std::vector<std::string>& out_leaves, const std::vector<std::string>& closed) {
  auto lookup = [&](const std::vector<std::string>& names) {
    std::vector<VertexId> ids;
    for (const auto& n : names) {
      auto v = g.find_vertex(n);
      if (!v) fail(ErrorCode::UnknownName, "unknown vertex '" + n + "'");
      ids.push_back(*v);
    }
    return ids;
  };
  auto in = lookup(in_leaves);
  auto out = lookup(out_leaves);
  auto cl = lookup(closed);
  return decorate(std::move(g), std::move(in), std::move(out), std::move(cl));
}

std::vector<IncomingCircle> incoming_circles(const OpenClosedFatGraph& g) {
  std::vector<IncomingCircle> circles;
  const FatGraph& base = g.base();
  for (std::size_t j = 0; j < g.in_leaves().size(); ++j) {
    VertexId leaf = g.in_leaves()[j];
    if (!g.is_closed(leaf)) continue;
    auto cycle = anchored_leaf_cycle(base, leaf);
    IncomingCircle c;
    c.in_index = j;
    c.leaf = leaf;
    c.attach = cycle[0];
    c.circle.assign(cycle.begin() + 2, cycle.end());
    circles.push_back(std::move(c));
  }
  return circles;
}

std::string AdmissibilityWitness::describe(const FatGraph& g) const {
  std::string who = "closed incoming leaf '" + g.vertex_name(leaf) + "'";
  switch (kind) {
    case AdmissibilityFailure::EmptyCircle: return who + ": boundary cycle has no circle edges";
    case AdmissibilityFailure::RepeatedVertex: return who + ": vertex '" + cell + "' repeated on its cycle";
    case AdmissibilityFailure::RepeatedEdge: return who + ": edge '" + cell + "' traversed twice on its cycle";
    case AdmissibilityFailure::SharedWithCircle: return who + ": '" + cell + "' shared with another incoming circle";
    case AdmissibilityFailure::ContainsInLeaf: return who + ": circle passes through incoming leaf '" + cell + "'";
  }
  return who;
}

AdmissibilityReport is_admissible(const OpenClosedFatGraph& g) {
  const FatGraph& base = g.base();
  AdmissibilityReport report;
  auto reject = [&](VertexId leaf, AdmissibilityFailure kind, std::string cell) {
    report.admissible = false;
    report.witness = AdmissibilityWitness{leaf, kind, std::move(cell)};
    return report;
  };
  std::vector<VertexId> vertex_owner(base.vertex_count(), kNoCell);
  std::vector<VertexId> edge_owner(base.edge_count(), kNoCell);
  std::set<VertexId> in_leaf_vertices(g.in_leaves().begin(), g.in_leaves().end());
  for (const auto& c : incoming_circles(g)) {
    if (c.circle.empty()) return reject(c.leaf, AdmissibilityFailure::EmptyCircle, "");
    std::set<VertexId> seen_v;
    std::set<EdgeId> seen_e;
    for (HalfEdgeId a : c.circle) {
      VertexId v = base.source(a);
      EdgeId e = FatGraph::edge_of(a);
      if (!seen_v.insert(v).second) return reject(c.leaf, AdmissibilityFailure::RepeatedVertex, base.vertex_name(v));
      if (!seen_e.insert(e).second) return reject(c.leaf, AdmissibilityFailure::RepeatedEdge, base.edge_name(e));
      if (in_leaf_vertices.count(v)) return reject(c.leaf, AdmissibilityFailure::ContainsInLeaf, base.vertex_name(v));
    }
    for (VertexId v : seen_v) {
      if (vertex_owner[v] != kNoCell) return reject(c.leaf, AdmissibilityFailure::SharedWithCircle, base.vertex_name(v));
      vertex_owner[v] = c.leaf;
    }
    for (EdgeId e : seen_e) {
      if (edge_owner[e] != kNoCell) return reject(c.leaf, AdmissibilityFailure::SharedWithCircle, base.edge_name(e));
      edge_owner[e] = c.leaf;
    }
  }
  return report;
}

IncomingPartition incoming_partition(const OpenClosedFatGraph& g) {
  auto adm = is_admissible(g);
  if (!adm.admissible) fail(ErrorCode::NotAdmissible, adm.witness->describe(g.base()));
  const FatGraph& base = g.base();
  IncomingPartition p;
  p.vertex_in.assign(base.vertex_count(), false);
  p.edge_in.assign(base.edge_count(), false);
  p.half_edge_in.assign(base.half_edge_count(), false);
  std::vector<std::size_t> owner(base.vertex_count(), kNoCell);
  p.circles = incoming_circles(g);
  for (const auto& c : p.circles) {
    for (HalfEdgeId a : c.circle) {
      p.vertex_in[base.source(a)] = true;
      owner[base.source(a)] = c.in_index;
      p.edge_in[FatGraph::edge_of(a)] = true;
    }
    p.edge_in[FatGraph::edge_of(c.attach)] = true;
  }
  for (std::size_t j = 0; j < g.in_leaves().size(); ++j) {
    p.vertex_in[g.in_leaves()[j]] = true;
    owner[g.in_leaves()[j]] = j;
  }
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    if (p.vertex_in[v]) {
      p.v_in.push_back(v);
      p.in_owner.push_back(owner[v]);
    } else {
      p.e_v.push_back(v);
    }
  }
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    (p.edge_in[e] ? p.e_in : p.e_e).push_back(e);
    p.half_edge_in[2 * e] = p.half_edge_in[2 * e + 1] = p.edge_in[e];
  }
  for (HalfEdgeId h = 0; h < base.half_edge_count(); ++h) (p.half_edge_in[h] ? p.h_in : p.e_h).push_back(h);
  return p;
}

CobordismSignature cobordism_signature(const OpenClosedFatGraph& g) {
  const FatGraph& base = g.base();
  SurfaceSignature surf = surface_invariants(base);
  Components comps = connected_components(base);
  BoundaryCycles bc = boundary_cycles(base);

  CobordismSignature sig;
  sig.components.resize(comps.count());
  for (std::size_t k = 0; k < comps.count(); ++k) {
    sig.components[k].genus = surf.components[k].genus;
    sig.components[k].boundary_count = surf.components[k].boundary_count;
    sig.components[k].euler_characteristic = surf.components[k].euler_characteristic;
  }

  // position of each special leaf's half-edge within its cycle
  std::vector<std::vector<std::pair<std::size_t, VertexId>>> on_cycle(bc.cycles.size());
  std::vector<std::size_t> position(base.half_edge_count());
  for (const auto& cycle : bc.cycles)
    for (std::size_t k = 0; k < cycle.size(); ++k) position[cycle[k]] = k;
  for (const auto* list : {&g.in_leaves(), &g.out_leaves()})
    for (VertexId v : *list) {
      HalfEdgeId h = base.rotation(v)[0];
      on_cycle[bc.half_edge_to_cycle[h]].emplace_back(position[h], v);
    }

  for (std::size_t c = 0; c < bc.cycles.size(); ++c) {
    BoundaryClass cls;
    cls.cycle = c;
    cls.component = comps.vertex_component[base.source(bc.cycles[c].front())];
    auto& comp = sig.components[cls.component];
    auto& leaves = on_cycle[c];
    std::sort(leaves.begin(), leaves.end());
    if (leaves.empty()) {
      cls.kind = BoundaryKind::Free;
      ++comp.free;
    } else if (leaves.size() == 1 && g.is_closed(leaves[0].second)) {
      VertexId v = leaves[0].second;
      bool in = g.role(v) == LeafRole::In;
      cls.kind = in ? BoundaryKind::IncomingCircle : BoundaryKind::OutgoingCircle;
      cls.closed_index = g.role_index(v);
      ++(in ? comp.in_circles : comp.out_circles);
    } else {
      cls.kind = BoundaryKind::Intervals;
      for (const auto& [pos, v] : leaves) {
        LeafRole r = g.role(v);
        cls.open_leaves.push_back({r, g.role_index(v)});
        ++(r == LeafRole::In ? comp.in_intervals : comp.out_intervals);
      }
    }
    sig.boundaries.push_back(std::move(cls));
  }

  for (std::size_t j = 0; j < g.in_leaves().size(); ++j) {
    VertexId v = g.in_leaves()[j];
    sig.source.push_back(g.is_closed(v) ? OneManifold::Circle : OneManifold::Interval);
    sig.components[comps.vertex_component[v]].in_indices.push_back(j);
  }
  for (std::size_t j = 0; j < g.out_leaves().size(); ++j) {
    VertexId v = g.out_leaves()[j];
    sig.target.push_back(g.is_closed(v) ? OneManifold::Circle : OneManifold::Interval);
    sig.components[comps.vertex_component[v]].out_indices.push_back(j);
  }
  return sig;
}

bool equivalent(const CobordismSignature& a, const CobordismSignature& b) {
  if (a.source != b.source || a.target != b.target || a.components.size() != b.components.size()) return false;
  auto key = [](const CobordismComponent& c) {
    return std::tie(c.genus, c.boundary_count, c.euler_characteristic, c.in_circles, c.in_intervals,
                    c.out_circles, c.out_intervals, c.free, c.in_indices, c.out_indices);
  };
  auto less = [&](const CobordismComponent& x, const CobordismComponent& y) { return key(x) < key(y); };
  auto ca = a.components, cb = b.components;
  std::sort(ca.begin(), ca.end(), less);
  std::sort(cb.begin(), cb.end(), less);
  return ca == cb;
}

bool check_positive_boundary(const OpenClosedFatGraph& g) {
  const FatGraph& base = g.base();
  Components comps = connected_components(base);
  BoundaryCycles bc = boundary_cycles(base);
  std::vector<bool> positive(comps.count(), false);
  for (const auto& cycle : bc.cycles) {
    bool incoming_circle = false;
    for (VertexId v : g.in_leaves())
      if (g.is_closed(v) && bc.half_edge_to_cycle[base.rotation(v)[0]] == bc.half_edge_to_cycle[cycle[0]])
        incoming_circle = true;
    // An open incoming leaf occupies only part of its cycle; the rest is free.
    if (!incoming_circle) positive[comps.vertex_component[base.source(cycle[0])]] = true;
  }
  return std::all_of(positive.begin(), positive.end(), [](bool b) { return b; });
}

std::string to_string(const std::vector<OneManifold>& m) {
  if (m.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) s += "+";
    s += m[k] == OneManifold::Circle ? "S1" : "I";
  }
  return s;
}

OpenClosedFatGraph transport_decorations(const OpenClosedFatGraph& g, FatGraph target,
                                         const std::vector<VertexId>& vertex_map) {
  auto push = [&](const std::vector<VertexId>& list) {
    std::vector<VertexId> out;
    for (VertexId v : list) {
      if (vertex_map[v] == kNoCell) fail(ErrorCode::DecorationDestroyed, "a decorated leaf disappeared");
      out.push_back(vertex_map[v]);
    }
    return out;
  };
  return decorate(std::move(target), push(g.in_leaves()), push(g.out_leaves()), push(g.closed_leaves()));
}

OpenClosedSubdivision subdivide_edge(const OpenClosedFatGraph& g, EdgeId e) {
  Subdivision s = subdivide_edge(g.base(), e);
  OpenClosedSubdivision out;
  out.graph = transport_decorations(g, std::move(s.graph), s.map.vertex);
  out.map = std::move(s.map);
  out.new_vertex = s.new_vertex;
  return out;
}

OpenClosedSmoothing smooth_bivalent(const OpenClosedFatGraph& g) {
  Smoothing s = smooth_bivalent(g.base());
  OpenClosedSmoothing out;
  out.graph = transport_decorations(g, std::move(s.graph), s.map.vertex);
  out.map = std::move(s.map);
  return out;
}

OpenClosedUnion disjoint_union(const OpenClosedFatGraph& a, const OpenClosedFatGraph& b) {
  Union u = disjoint_union(a.base(), b.base());
  std::vector<VertexId> in, out, closed;
  for (VertexId v : a.in_leaves()) in.push_back(u.left.vertex[v]);
  for (VertexId v : b.in_leaves()) in.push_back(u.right.vertex[v]);
  for (VertexId v : a.out_leaves()) out.push_back(u.left.vertex[v]);
  for (VertexId v : b.out_leaves()) out.push_back(u.right.vertex[v]);
  for (VertexId v : a.closed_leaves()) closed.push_back(u.left.vertex[v]);
  for (VertexId v : b.closed_leaves()) closed.push_back(u.right.vertex[v]);
  OpenClosedUnion r;
  r.graph = decorate(std::move(u.graph), std::move(in), std::move(out), std::move(closed));
  r.left = std::move(u.left);
  r.right = std::move(u.right);
  return r;
}

}  // namespace fatcob
