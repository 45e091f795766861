#include "fatcob/fatgraph.hpp"

#include <algorithm>
#include <numeric>

#include "fatcob/error.hpp"
#include "union_find.hpp"

namespace fatcob {

namespace {

std::vector<std::size_t> sorted_positions(const std::vector<std::string>& names) {
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  std::vector<std::size_t> position(names.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  return position;
}

std::string padded(char prefix, std::size_t k, std::size_t count) {
  std::string digits = std::to_string(k);
  std::size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  return std::string(1, prefix) + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  std::string name = base;
  while (taken.count(name)) name += '\'';
  return name;
}

FatGraph::Assembled FatGraph::assemble_with_map(std::vector<std::string> vertex_names,
                                                std::vector<bool> isolated,
                                                std::vector<std::string> edge_names,
                                                const std::vector<VertexId>& source,
                                                const std::vector<HalfEdgeId>& sigma) {
  const std::size_t nv = vertex_names.size();
  const std::size_t ne = edge_names.size();
  const std::size_t nh = 2 * ne;
  if (isolated.size() != nv || source.size() != nh || sigma.size() != nh)
    fail(ErrorCode::Internal, "inconsistent cell arrays");

  std::set<std::string> seen;
  for (const auto* names : {&vertex_names, &edge_names})
    for (const auto& n : *names)
      if (!seen.insert(n).second) fail(ErrorCode::DuplicateName, "name '" + n + "' used twice");

  std::vector<bool> hit(nh, false);
  for (HalfEdgeId h = 0; h < nh; ++h) {
    if (source[h] >= nv) fail(ErrorCode::Internal, "source out of range");
    if (sigma[h] >= nh || hit[sigma[h]]) fail(ErrorCode::Internal, "vertex order is not a permutation");
    hit[sigma[h]] = true;
    if (source[sigma[h]] != source[h])
      fail(ErrorCode::WrongVertexOrder, "cyclic order at '" + vertex_names[source[h]] +
                                            "' contains a half-edge of another vertex");
  }

  auto vpos = sorted_positions(vertex_names);
  auto epos = sorted_positions(edge_names);
  std::vector<HalfEdgeId> hpos(nh);
  for (HalfEdgeId h = 0; h < nh; ++h) hpos[h] = 2 * epos[h / 2] + (h & 1U);

  Assembled out;
  FatGraph& g = out.graph;
  g.vertex_names_.resize(nv);
  g.isolated_.resize(nv);
  for (VertexId v = 0; v < nv; ++v) {
    g.vertex_names_[vpos[v]] = std::move(vertex_names[v]);
    g.isolated_[vpos[v]] = isolated[v];
  }
  g.edge_names_.resize(ne);
  for (EdgeId e = 0; e < ne; ++e) g.edge_names_[epos[e]] = std::move(edge_names[e]);
  g.source_.resize(nh);
  g.sigma_.resize(nh);
  for (HalfEdgeId h = 0; h < nh; ++h) {
    g.source_[hpos[h]] = vpos[source[h]];
    g.sigma_[hpos[h]] = hpos[sigma[h]];
  }

  g.rotation_.assign(nv, {});
  std::vector<std::size_t> valence(nv, 0);
  for (HalfEdgeId h = 0; h < nh; ++h) ++valence[g.source_[h]];
  std::vector<bool> placed(nh, false);
  for (HalfEdgeId h = 0; h < nh; ++h) {
    if (placed[h]) continue;
    auto& rot = g.rotation_[g.source_[h]];
    if (!rot.empty())
      fail(ErrorCode::WrongVertexOrder,
           "cyclic order at '" + g.vertex_names_[g.source_[h]] + "' splits into several cycles");
    HalfEdgeId x = h;
    do {
      rot.push_back(x);
      placed[x] = true;
      x = g.sigma_[x];
    } while (x != h);
  }
  for (VertexId v = 0; v < nv; ++v) {
    if (valence[v] == 0 && !g.isolated_[v])
      fail(ErrorCode::IsolatedVertex, "vertex '" + g.vertex_names_[v] + "' has no half-edges");
    if (valence[v] > 0 && g.isolated_[v])
      fail(ErrorCode::IsolatedVertex, "vertex '" + g.vertex_names_[v] + "' is flagged isolated but has half-edges");
  }

  out.vertex_index = std::move(vpos);
  out.half_edge_index = std::move(hpos);
  return out;
}

FatGraph FatGraph::assemble(std::vector<std::string> vertex_names, std::vector<bool> isolated,
                            std::vector<std::string> edge_names, const std::vector<VertexId>& source,
                            const std::vector<HalfEdgeId>& sigma) {
  return assemble_with_map(std::move(vertex_names), std::move(isolated), std::move(edge_names),
                           source, sigma)
      .graph;
}

FatGraph FatGraph::create(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges,
                          const std::map<std::string, std::vector<std::string>>& orders) {
  std::map<std::string, VertexId> vindex;
  std::vector<std::string> vnames;
  std::vector<bool> isolated;
  for (const auto& v : vertices) {
    if (!vindex.emplace(v.name, vnames.size()).second)
      fail(ErrorCode::DuplicateName, "vertex '" + v.name + "' declared twice");
    vnames.push_back(v.name);
    isolated.push_back(v.isolated);
  }

  std::map<std::string, HalfEdgeId> hindex;
  std::vector<std::string> enames;
  std::vector<VertexId> source;
  for (const auto& e : edges) {
    auto s = vindex.find(e.source);
    auto t = vindex.find(e.target);
    if (s == vindex.end()) fail(ErrorCode::UnknownName, "edge '" + e.name + "' uses unknown vertex '" + e.source + "'");
    if (t == vindex.end()) fail(ErrorCode::UnknownName, "edge '" + e.name + "' uses unknown vertex '" + e.target + "'");
    if (vindex.count(e.name)) fail(ErrorCode::DuplicateName, "name '" + e.name + "' used twice");
    if (!hindex.emplace(e.name + ".0", source.size()).second)
      fail(ErrorCode::DuplicateName, "edge '" + e.name + "' declared twice");
    hindex.emplace(e.name + ".1", source.size() + 1);
    enames.push_back(e.name);
    source.push_back(s->second);
    source.push_back(t->second);
  }

  const std::size_t nh = source.size();
  std::vector<HalfEdgeId> sigma(nh, kNoCell);
  for (const auto& [vname, list] : orders) {
    auto v = vindex.find(vname);
    if (v == vindex.end()) fail(ErrorCode::UnknownName, "order for unknown vertex '" + vname + "'");
    if (list.empty()) continue;
    if (isolated[v->second])
      fail(ErrorCode::WrongVertexOrder, "isolated vertex '" + vname + "' has a cyclic order");
    std::vector<HalfEdgeId> hs;
    for (const auto& hname : list) {
      auto h = hindex.find(hname);
      if (h == hindex.end()) fail(ErrorCode::UnknownName, "unknown half-edge '" + hname + "'");
      if (source[h->second] != v->second)
        fail(ErrorCode::WrongVertexOrder, "half-edge '" + hname + "' listed at '" + vname +
                                              "' but its source is '" + vnames[source[h->second]] + "'");
      if (sigma[h->second] != kNoCell || std::find(hs.begin(), hs.end(), h->second) != hs.end())
        fail(ErrorCode::WrongVertexOrder, "half-edge '" + hname + "' listed twice");
      hs.push_back(h->second);
    }
    for (std::size_t k = 0; k < hs.size(); ++k) sigma[hs[k]] = hs[(k + 1) % hs.size()];
  }
  for (HalfEdgeId h = 0; h < nh; ++h)
    if (sigma[h] == kNoCell)
      fail(ErrorCode::DanglingHalfEdge,
           "half-edge '" + enames[h / 2] + (h & 1U ? ".1" : ".0") + "' missing from the order at '" +
               vnames[source[h]] + "'");

  return assemble(std::move(vnames), std::move(isolated), std::move(enames), source, sigma);
}

FatGraph FatGraph::from_maps(std::size_t vertex_count, const std::vector<VertexId>& source,
                             const std::vector<HalfEdgeId>& involution,
                             const std::vector<HalfEdgeId>& sigma) {
  const std::size_t n = source.size();
  if (involution.size() != n || sigma.size() != n)
    fail(ErrorCode::InvalidArgument, "source, involution and sigma differ in length");
  for (HalfEdgeId h = 0; h < n; ++h) {
    if (source[h] >= vertex_count) fail(ErrorCode::InvalidArgument, "source out of range");
    if (involution[h] >= n || involution[involution[h]] != h)
      fail(ErrorCode::FixedPointInvolution, "involution is not an involution at " + std::to_string(h));
    if (involution[h] == h)
      fail(ErrorCode::FixedPointInvolution, "half-edge " + std::to_string(h) + " is fixed by the involution");
    if (sigma[h] >= n) fail(ErrorCode::InvalidArgument, "sigma out of range");
  }
  std::vector<HalfEdgeId> relabel(n);
  std::vector<VertexId> src(n);
  std::size_t e = 0;
  for (HalfEdgeId h = 0; h < n; ++h) {
    if (h < involution[h]) {
      relabel[h] = 2 * e;
      relabel[involution[h]] = 2 * e + 1;
      ++e;
    }
  }
  std::vector<HalfEdgeId> sig(n);
  for (HalfEdgeId h = 0; h < n; ++h) {
    src[relabel[h]] = source[h];
    sig[relabel[h]] = relabel[sigma[h]];
  }
  std::vector<std::string> vnames, enames;
  for (std::size_t k = 0; k < vertex_count; ++k) vnames.push_back(padded('v', k, vertex_count));
  for (std::size_t k = 0; k < e; ++k) enames.push_back(padded('e', k, e));
  std::vector<bool> isolated(vertex_count, false);
  for (VertexId v = 0; v < vertex_count; ++v)
    isolated[v] = std::find(source.begin(), source.end(), v) == source.end();
  return assemble(std::move(vnames), std::move(isolated), std::move(enames), src, sig);
}

std::string FatGraph::half_edge_name(HalfEdgeId h) const {
  return edge_names_.at(h / 2) + ((h & 1U) ? ".1" : ".0");
}

std::optional<VertexId> FatGraph::find_vertex(const std::string& name) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names_.begin());
}

std::optional<EdgeId> FatGraph::find_edge(const std::string& name) const {
  auto it = std::lower_bound(edge_names_.begin(), edge_names_.end(), name);
  if (it == edge_names_.end() || *it != name) return std::nullopt;
  return static_cast<EdgeId>(it - edge_names_.begin());
}

std::optional<HalfEdgeId> FatGraph::find_half_edge(const std::string& name) const {
  auto dot = name.rfind('.');
  if (dot == std::string::npos) return std::nullopt;
  std::string side = name.substr(dot + 1);
  if (side != "0" && side != "1") return std::nullopt;
  auto e = find_edge(name.substr(0, dot));
  if (!e) return std::nullopt;
  return 2 * *e + (side == "1" ? 1 : 0);
}

bool FatGraph::operator==(const FatGraph& other) const {
  return vertex_names_ == other.vertex_names_ && isolated_ == other.isolated_ &&
         edge_names_ == other.edge_names_ && source_ == other.source_ && sigma_ == other.sigma_;
}

BoundaryCycles boundary_cycles(const FatGraph& g) {
  BoundaryCycles bc;
  const std::size_t nh = g.half_edge_count();
  bc.half_edge_to_cycle.assign(nh, kNoCell);
  for (HalfEdgeId h = 0; h < nh; ++h) {
    if (bc.half_edge_to_cycle[h] != kNoCell) continue;
    std::vector<HalfEdgeId> cycle;
    HalfEdgeId x = h;
    do {
      bc.half_edge_to_cycle[x] = bc.cycles.size();
      cycle.push_back(x);
      x = g.omega(x);
    } while (x != h);
    bc.cycles.push_back(std::move(cycle));
  }
  return bc;
}

Components connected_components(const FatGraph& g) {
  UnionFind uf(g.vertex_count());
  for (HalfEdgeId h = 0; h < g.half_edge_count(); h += 2) uf.unite(g.source(h), g.source(h + 1));
  Components c;
  c.vertex_component.assign(g.vertex_count(), kNoCell);
  std::vector<std::size_t> root_to_component(g.vertex_count(), kNoCell);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t r = uf.find(v);
    if (root_to_component[r] == kNoCell) {
      root_to_component[r] = c.vertices.size();
      c.vertices.emplace_back();
      c.half_edges.emplace_back();
    }
    c.vertex_component[v] = root_to_component[r];
    c.vertices[root_to_component[r]].push_back(v);
  }
  for (HalfEdgeId h = 0; h < g.half_edge_count(); ++h)
    c.half_edges[c.vertex_component[g.source(h)]].push_back(h);
  return c;
}

SurfaceSignature surface_invariants(const FatGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.is_isolated(v))
      fail(ErrorCode::IsolatedVertex, "surface invariants undefined for isolated vertex '" + g.vertex_name(v) + "'");
  Components comps = connected_components(g);
  BoundaryCycles bc = boundary_cycles(g);
  SurfaceSignature sig;
  sig.components.resize(comps.count());
  for (std::size_t k = 0; k < comps.count(); ++k) {
    auto& c = sig.components[k];
    c.vertex_count = comps.vertices[k].size();
    c.edge_count = comps.half_edges[k].size() / 2;
    c.euler_characteristic = static_cast<std::int64_t>(c.vertex_count) - static_cast<std::int64_t>(c.edge_count);
  }
  for (const auto& cycle : bc.cycles) ++sig.components[comps.vertex_component[g.source(cycle.front())]].boundary_count;
  for (auto& c : sig.components) {
    std::int64_t twice_genus = 2 - c.euler_characteristic - c.boundary_count;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      fail(ErrorCode::Internal, "non-integer genus; the graph is corrupted");
    c.genus = static_cast<int>(twice_genus / 2);
    sig.genus += c.genus;
    sig.boundary_count += c.boundary_count;
    sig.euler_characteristic += c.euler_characteristic;
  }
  return sig;
}

Subdivision subdivide_edge(const FatGraph& g, EdgeId e) {
  if (e >= g.edge_count()) fail(ErrorCode::UnknownEdge, "edge index " + std::to_string(e) + " out of range");
  std::set<std::string> taken(g.vertex_names().begin(), g.vertex_names().end());
  taken.insert(g.edge_names().begin(), g.edge_names().end());
  std::string vname = fresh_name(g.edge_name(e) + "_m", taken);
  taken.insert(vname);
  std::string ename = fresh_name(g.edge_name(e) + "_s", taken);

  std::vector<std::string> vnames = g.vertex_names();
  std::vector<bool> isolated(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) isolated[v] = g.is_isolated(v);
  std::vector<std::string> enames = g.edge_names();
  std::vector<VertexId> source = g.source_map();
  std::vector<HalfEdgeId> sigma = g.sigma_map();

  const VertexId w = vnames.size();
  const EdgeId f = enames.size();
  const HalfEdgeId old_far = 2 * e + 1;
  const HalfEdgeId near_new = 2 * f, far_new = 2 * f + 1;
  vnames.push_back(vname);
  isolated.push_back(false);
  enames.push_back(ename);
  source.push_back(w);
  source.push_back(source[old_far]);
  sigma.push_back(0);
  sigma.push_back(0);

  // far_new takes the slot of old_far in the cyclic order at the far end
  HalfEdgeId pred = kNoCell;
  for (HalfEdgeId h = 0; h < 2 * f; ++h)
    if (g.sigma(h) == old_far) pred = h;
  sigma[far_new] = g.sigma(old_far) == old_far ? far_new : g.sigma(old_far);
  if (pred != old_far) sigma[pred] = far_new;
  source[old_far] = w;
  sigma[old_far] = near_new;
  sigma[near_new] = old_far;

  auto a = FatGraph::assemble_with_map(std::move(vnames), std::move(isolated), std::move(enames), source, sigma);
  Subdivision out;
  out.new_vertex = a.vertex_index[w];
  out.map.vertex.assign(a.vertex_index.begin(), a.vertex_index.begin() + static_cast<std::ptrdiff_t>(g.vertex_count()));
  out.map.half_edge.assign(a.half_edge_index.begin(), a.half_edge_index.begin() + static_cast<std::ptrdiff_t>(2 * f));
  out.map.half_edge[old_far] = a.half_edge_index[far_new];
  out.graph = std::move(a.graph);
  return out;
}

Subdivision subdivide_edge(const FatGraph& g, const std::string& edge_name) {
  auto e = g.find_edge(edge_name);
  if (!e) fail(ErrorCode::UnknownEdge, "unknown edge '" + edge_name + "'");
  return subdivide_edge(g, *e);
}

namespace {

// One smoothing step at w; returns the graph and the correspondence.
Smoothing smooth_at(const FatGraph& g, VertexId w) {
  const HalfEdgeId x = g.rotation(w)[0];
  const HalfEdgeId y = g.rotation(w)[1];
  const EdgeId e1 = FatGraph::edge_of(x), e2 = FatGraph::edge_of(y);
  const HalfEdgeId xf = FatGraph::involution(x), yf = FatGraph::involution(y);
  const EdgeId keep_edge = g.edge_name(e1) < g.edge_name(e2) ? e1 : e2;
  // The surviving half on the kept edge keeps its side.
  const HalfEdgeId kept_far = keep_edge == e1 ? xf : yf;
  const HalfEdgeId other_far = keep_edge == e1 ? yf : xf;

  std::vector<std::string> vnames;
  std::vector<bool> isolated;
  std::vector<VertexId> vmap(g.vertex_count(), kNoCell);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == w) continue;
    vmap[v] = vnames.size();
    vnames.push_back(g.vertex_name(v));
    isolated.push_back(g.is_isolated(v));
  }
  std::vector<std::string> enames;
  std::vector<HalfEdgeId> hmap(g.half_edge_count(), kNoCell);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == e1 || e == e2) continue;
    hmap[2 * e] = 2 * enames.size();
    hmap[2 * e + 1] = 2 * enames.size() + 1;
    enames.push_back(g.edge_name(e));
  }
  const EdgeId joined = enames.size();
  enames.push_back(g.edge_name(keep_edge));
  hmap[kept_far] = 2 * joined + (kept_far & 1U);
  hmap[other_far] = 2 * joined + 1 - (kept_far & 1U);

  std::vector<VertexId> source(2 * enames.size());
  std::vector<HalfEdgeId> sigma(2 * enames.size());
  for (HalfEdgeId h = 0; h < g.half_edge_count(); ++h) {
    if (hmap[h] == kNoCell) continue;
    source[hmap[h]] = vmap[g.source(h)];
    sigma[hmap[h]] = hmap[g.sigma(h)];
  }
  auto a = FatGraph::assemble_with_map(std::move(vnames), std::move(isolated), std::move(enames), source, sigma);
  Smoothing s;
  s.map.vertex.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) s.map.vertex[v] = vmap[v] == kNoCell ? kNoCell : a.vertex_index[vmap[v]];
  s.map.half_edge.resize(g.half_edge_count());
  for (HalfEdgeId h = 0; h < g.half_edge_count(); ++h)
    s.map.half_edge[h] = hmap[h] == kNoCell ? kNoCell : a.half_edge_index[hmap[h]];
  s.graph = std::move(a.graph);
  return s;
}

std::vector<std::size_t> compose_maps(const std::vector<std::size_t>& first, const std::vector<std::size_t>& second) {
  std::vector<std::size_t> out(first.size());
  for (std::size_t k = 0; k < first.size(); ++k) out[k] = first[k] == kNoCell ? kNoCell : second[first[k]];
  return out;
}

}  // namespace

Smoothing smooth_bivalent(const FatGraph& g, const std::vector<bool>& keep) {
  std::set<std::string> kept;
  for (VertexId v = 0; v < keep.size() && v < g.vertex_count(); ++v)
    if (keep[v]) kept.insert(g.vertex_name(v));

  Smoothing result;
  result.graph = g;
  result.map.vertex.resize(g.vertex_count());
  std::iota(result.map.vertex.begin(), result.map.vertex.end(), 0);
  result.map.half_edge.resize(g.half_edge_count());
  std::iota(result.map.half_edge.begin(), result.map.half_edge.end(), 0);

  for (;;) {
    const FatGraph& cur = result.graph;
    VertexId target = kNoCell;
    for (VertexId v = 0; v < cur.vertex_count() && target == kNoCell; ++v) {
      if (cur.valence(v) != 2 || kept.count(cur.vertex_name(v))) continue;
      if (FatGraph::edge_of(cur.rotation(v)[0]) == FatGraph::edge_of(cur.rotation(v)[1])) continue;
      target = v;
    }
    if (target == kNoCell) break;
    Smoothing step = smooth_at(cur, target);
    result.map.vertex = compose_maps(result.map.vertex, step.map.vertex);
    result.map.half_edge = compose_maps(result.map.half_edge, step.map.half_edge);
    result.graph = std::move(step.graph);
  }
  return result;
}

Union disjoint_union(const FatGraph& a, const FatGraph& b) {
  std::set<std::string> taken(a.vertex_names().begin(), a.vertex_names().end());
  taken.insert(a.edge_names().begin(), a.edge_names().end());
  taken.insert(b.vertex_names().begin(), b.vertex_names().end());
  taken.insert(b.edge_names().begin(), b.edge_names().end());
  std::set<std::string> left(a.vertex_names().begin(), a.vertex_names().end());
  left.insert(a.edge_names().begin(), a.edge_names().end());
  auto rename = [&](const std::string& n) {
    if (!left.count(n)) return n;
    std::string fresh = fresh_name(n, taken);
    taken.insert(fresh);
    return fresh;
  };

  std::vector<std::string> vnames = a.vertex_names(), enames = a.edge_names();
  std::vector<bool> isolated;
  for (VertexId v = 0; v < a.vertex_count(); ++v) isolated.push_back(a.is_isolated(v));
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    vnames.push_back(rename(b.vertex_name(v)));
    isolated.push_back(b.is_isolated(v));
  }
  for (EdgeId e = 0; e < b.edge_count(); ++e) enames.push_back(rename(b.edge_name(e)));

  const std::size_t na = a.half_edge_count();
  std::vector<VertexId> source = a.source_map();
  std::vector<HalfEdgeId> sigma = a.sigma_map();
  for (HalfEdgeId h = 0; h < b.half_edge_count(); ++h) {
    source.push_back(a.vertex_count() + b.source(h));
    sigma.push_back(na + b.sigma(h));
  }
  auto asm_ = FatGraph::assemble_with_map(std::move(vnames), std::move(isolated), std::move(enames), source, sigma);
  Union u;
  u.left.vertex.assign(asm_.vertex_index.begin(), asm_.vertex_index.begin() + static_cast<std::ptrdiff_t>(a.vertex_count()));
  u.right.vertex.assign(asm_.vertex_index.begin() + static_cast<std::ptrdiff_t>(a.vertex_count()), asm_.vertex_index.end());
  u.left.half_edge.assign(asm_.half_edge_index.begin(), asm_.half_edge_index.begin() + static_cast<std::ptrdiff_t>(na));
  u.right.half_edge.assign(asm_.half_edge_index.begin() + static_cast<std::ptrdiff_t>(na), asm_.half_edge_index.end());
  u.graph = std::move(asm_.graph);
  return u;
}

}  // namespace fatcob
