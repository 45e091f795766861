#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<std::size_t> inverse(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

}  // namespace

PolygonSurface polygon_gluing(const fatcob::FatGraph& g) {
  const std::size_t n = g.half_edge_count();
  const auto& sigma = g.sigma_map();
  auto sigma_inv = inverse(sigma);

  // Walk faces backwards: the side before h is sigma^{-1}(h) flipped.
  std::vector<std::size_t> face_of(n, SIZE_MAX);
  std::vector<std::vector<std::size_t>> faces;
  for (std::size_t h0 = 0; h0 < n; ++h0) {
    if (face_of[h0] != SIZE_MAX) continue;
    std::vector<std::size_t> sides;
    std::size_t h = h0;
    do {
      face_of[h] = faces.size();
      sides.push_back(h);
      h = sigma_inv[h] ^ 1U;
    } while (h != h0);
    std::reverse(sides.begin(), sides.end());
    faces.push_back(std::move(sides));
  }

  // Corner k of a face sits before side k. Side h runs from its corner to the
  // next one; gluing h to its partner reversed identifies endpoints crosswise.
  std::vector<std::size_t> corner_start(n), corner_end(n);
  std::size_t corners = 0;
  for (const auto& f : faces) {
    for (std::size_t k = 0; k < f.size(); ++k) corner_start[f[k]] = corners + k;
    for (std::size_t k = 0; k < f.size(); ++k) corner_end[f[k]] = corners + (k + 1) % f.size();
    corners += f.size();
  }
  Dsu corner_classes(corners);
  for (std::size_t h = 0; h < n; ++h) {
    corner_classes.join(corner_start[h], corner_end[h ^ 1U]);
    corner_classes.join(corner_end[h], corner_start[h ^ 1U]);
  }

  // Components of the glued surface: faces linked across glued sides.
  Dsu face_classes(faces.size());
  for (std::size_t h = 0; h < n; ++h) face_classes.join(face_of[h], face_of[h ^ 1U]);

  // Order components by their smallest vertex, as the library does.
  std::map<std::size_t, std::size_t> smallest_vertex;
  for (std::size_t h = 0; h < n; ++h) {
    std::size_t r = face_classes.find(face_of[h]);
    auto [it, fresh] = smallest_vertex.emplace(r, g.source(h));
    if (!fresh) it->second = std::min(it->second, g.source(h));
  }
  std::vector<std::pair<std::size_t, std::size_t>> by_vertex;
  for (auto [r, v] : smallest_vertex) by_vertex.emplace_back(v, r);
  std::sort(by_vertex.begin(), by_vertex.end());

  PolygonSurface out;
  for (auto [v, root] : by_vertex) {
    std::set<std::size_t> corner_set;
    std::size_t face_count = 0, side_count = 0;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (face_classes.find(f) != root) continue;
      ++face_count;
      side_count += faces[f].size();
      for (std::size_t h : faces[f]) corner_set.insert(corner_classes.find(corner_start[h]));
    }
    long chi_closed = static_cast<long>(corner_set.size()) - static_cast<long>(side_count / 2) +
                      static_cast<long>(face_count);
    int genus = static_cast<int>((2 - chi_closed) / 2);
    out.genus.push_back(genus);
    out.boundary.push_back(static_cast<int>(face_count));
    out.total_genus += genus;
  }
  return out;
}

std::vector<std::uint64_t> pairing_genus_distribution(unsigned n) {
  const std::size_t m = 2 * n;
  std::vector<std::uint64_t> dist(n / 2 + 1, 0);
  std::vector<std::size_t> partner(m, SIZE_MAX);
  auto count_faces = [&] {
    std::vector<bool> seen(m, false);
    std::size_t faces = 0;
    for (std::size_t s = 0; s < m; ++s) {
      if (seen[s]) continue;
      ++faces;
      for (std::size_t h = s; !seen[h]; h = (partner[h] + 1) % m) seen[h] = true;
    }
    return faces;
  };
  auto recurse = [&](auto&& self) -> void {
    std::size_t first = 0;
    while (first < m && partner[first] != SIZE_MAX) ++first;
    if (first == m) {
      std::size_t faces = count_faces();
      std::size_t genus = (1 + n - faces) / 2;
      ++dist[genus];
      return;
    }
    for (std::size_t other = first + 1; other < m; ++other) {
      if (partner[other] != SIZE_MAX) continue;
      partner[first] = other;
      partner[other] = first;
      self(self);
      partner[first] = partner[other] = SIZE_MAX;
    }
  };
  if (n == 0) {
    dist[0] = 1;
    return dist;
  }
  recurse(recurse);
  return dist;
}

bool brute_force_isomorphic(const fatcob::OpenClosedFatGraph& a, const fatcob::OpenClosedFatGraph& b) {
  const auto& ga = a.base();
  const auto& gb = b.base();
  if (ga.half_edge_count() != gb.half_edge_count() || ga.vertex_count() != gb.vertex_count()) return false;
  if (a.in_leaves().size() != b.in_leaves().size() || a.out_leaves().size() != b.out_leaves().size()) return false;
  std::size_t isolated_a = 0, isolated_b = 0;
  for (std::size_t v = 0; v < ga.vertex_count(); ++v) isolated_a += ga.is_isolated(v) ? 1 : 0;
  for (std::size_t v = 0; v < gb.vertex_count(); ++v) isolated_b += gb.is_isolated(v) ? 1 : 0;
  if (isolated_a != isolated_b) return false;

  auto label = [](const fatcob::OpenClosedFatGraph& g, std::size_t h) {
    std::size_t v = g.base().source(h);
    int role = static_cast<int>(g.role(v));
    return std::make_tuple(role, role == 0 ? 0 : g.role_index(v), g.is_closed(v));
  };
  const std::size_t n = ga.half_edge_count();
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  do {
    bool ok = true;
    for (std::size_t h = 0; h < n && ok; ++h) {
      ok = phi[h ^ 1U] == (phi[h] ^ 1U) && phi[ga.sigma(h)] == gb.sigma(phi[h]) && label(a, h) == label(b, phi[h]);
    }
    if (ok) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return n == 0;
}

RelativeRanks relative_ranks(const fatcob::OpenClosedFatGraph& g) {
  const auto& base = g.base();
  const std::size_t nv = base.vertex_count(), ne = base.edge_count(), nh = base.half_edge_count();
  std::vector<bool> vertex_in(nv, false), edge_in(ne, false);
  for (auto v : g.in_leaves()) {
    vertex_in[v] = true;
    if (!g.is_closed(v)) continue;
    std::size_t leaf = SIZE_MAX;
    for (std::size_t h = 0; h < nh; ++h)
      if (base.source(h) == v) leaf = h;
    edge_in[leaf / 2] = true;
    for (std::size_t h = base.sigma(leaf ^ 1U); h != (leaf ^ 1U); h = base.sigma(h ^ 1U)) {
      vertex_in[base.source(h)] = true;
      edge_in[h / 2] = true;
    }
  }
  std::vector<std::size_t> col_of(nh, SIZE_MAX), row_of_edge(ne, SIZE_MAX), row_of_vertex(nv, SIZE_MAX);
  std::size_t cols = 0, rows = 0;
  RelativeRanks out;
  for (std::size_t e = 0; e < ne; ++e)
    if (!edge_in[e]) {
      row_of_edge[e] = rows++;
      col_of[2 * e] = cols++;
      col_of[2 * e + 1] = cols++;
      ++out.extra_edges;
    }
  for (std::size_t v = 0; v < nv; ++v)
    if (!vertex_in[v]) {
      row_of_vertex[v] = rows++;
      ++out.extra_vertices;
    }

  constexpr std::int64_t p = 1000003;
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t h = 0; h < nh; ++h) {
    if (col_of[h] == SIZE_MAX) continue;
    m[row_of_edge[h / 2]][col_of[h]] = 1;
    if (row_of_vertex[base.source(h)] != SIZE_MAX) m[row_of_vertex[base.source(h)]][col_of[h]] = p - 1;
  }
  auto power = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    for (b %= p; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    std::int64_t inv = power(m[rank][c], p - 2);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      std::int64_t f = m[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  out.h1 = cols - rank;
  out.h0 = rows - rank;
  return out;
}

std::vector<ExpectedComponent> as_expected(const fatcob::CobordismSignature& s) {
  std::vector<ExpectedComponent> out;
  for (const auto& c : s.components)
    out.push_back({c.genus, c.boundary_count, c.euler_characteristic, c.in_indices, c.out_indices});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExpectedComponent> glued_signature(const fatcob::CobordismSignature& left,
                                               const fatcob::CobordismSignature& right) {
  using fatcob::BoundaryKind;
  using fatcob::LeafRole;
  const std::size_t nl = left.components.size(), nr = right.components.size();
  const std::size_t pairs = left.target.size();

  // Component owning each leaf.
  auto owner = [](const fatcob::CobordismSignature& s, bool in, std::size_t index) {
    for (std::size_t c = 0; c < s.components.size(); ++c) {
      const auto& list = in ? s.components[c].in_indices : s.components[c].out_indices;
      if (std::find(list.begin(), list.end(), index) != list.end()) return c;
    }
    return SIZE_MAX;
  };
  Dsu comps(nl + nr);
  for (std::size_t i = 0; i < pairs; ++i) comps.join(owner(left, false, i), nl + owner(right, true, i));

  // Arcs between consecutive marks of interval boundaries. A mark is keyed
  // by (side, role, index); each knows the arc before and after it.
  struct MarkKey {
    int side;
    LeafRole role;
    std::size_t index;
    auto operator<=>(const MarkKey&) const = default;
  };
  std::map<MarkKey, std::pair<std::size_t, std::size_t>> arcs_at;  // mark -> (arc before, arc after)
  std::vector<std::size_t> arc_component;
  std::vector<MarkKey> arc_end_mark;  // mark at the end of each arc
  std::vector<int> markless(nl + nr, 0);

  auto add_side = [&](const fatcob::CobordismSignature& s, int side, std::size_t offset) {
    for (const auto& b : s.boundaries) {
      std::size_t comp = offset + b.component;
      if (b.kind == BoundaryKind::Free) {
        ++markless[comp];
      } else if (b.kind == BoundaryKind::IncomingCircle) {
        if (side == 0) ++markless[comp];  // right incoming circles are glued away
      } else if (b.kind == BoundaryKind::OutgoingCircle) {
        if (side == 1) ++markless[comp];
      } else {
        const std::size_t t = b.open_leaves.size();
        std::size_t first_arc = arc_component.size();
        for (std::size_t j = 0; j < t; ++j) {
          arc_component.push_back(comp);
          const auto& next = b.open_leaves[(j + 1) % t];
          arc_end_mark.push_back({side, next.role, next.index});
        }
        for (std::size_t j = 0; j < t; ++j) {
          const auto& m = b.open_leaves[j];
          arcs_at[{side, m.role, m.index}] = {first_arc + (j + t - 1) % t, first_arc + j};
        }
      }
    }
  };
  add_side(left, 0, 0);
  add_side(right, 1, nl);

  // Successor arc: through the end mark, unless that mark was glued, in
  // which case the boundary continues after the partner mark.
  std::map<MarkKey, MarkKey> glued_to;
  for (std::size_t i = 0; i < pairs; ++i) {
    if (left.target[i] != fatcob::OneManifold::Interval) continue;
    MarkKey x{0, LeafRole::Out, i}, y{1, LeafRole::In, i};
    glued_to[x] = y;
    glued_to[y] = x;
  }
  const std::size_t narcs = arc_component.size();
  std::vector<std::size_t> succ(narcs);
  for (std::size_t a = 0; a < narcs; ++a) {
    MarkKey m = arc_end_mark[a];
    auto it = glued_to.find(m);
    succ[a] = it == glued_to.end() ? arcs_at.at(m).second : arcs_at.at(it->second).second;
  }
  std::vector<int> boundary(nl + nr, 0);
  for (std::size_t c = 0; c < nl + nr; ++c) boundary[comps.find(c)] += markless[c];
  std::vector<bool> seen(narcs, false);
  for (std::size_t a = 0; a < narcs; ++a) {
    if (seen[a]) continue;
    ++boundary[comps.find(arc_component[a])];
    for (std::size_t b = a; !seen[b]; b = succ[b]) seen[b] = true;
  }

  std::map<std::size_t, ExpectedComponent> merged;
  std::vector<std::size_t> pairs_in(nl + nr, 0);
  for (std::size_t i = 0; i < pairs; ++i)
    if (left.target[i] == fatcob::OneManifold::Interval) ++pairs_in[comps.find(owner(left, false, i))];
  for (std::size_t c = 0; c < nl + nr; ++c) {
    auto& e = merged[comps.find(c)];
    const auto& src = c < nl ? left.components[c] : right.components[c - nl];
    e.chi += src.euler_characteristic;
    if (c < nl) e.in.insert(e.in.end(), src.in_indices.begin(), src.in_indices.end());
    else e.out.insert(e.out.end(), src.out_indices.begin(), src.out_indices.end());
  }
  std::vector<ExpectedComponent> out;
  for (auto& [root, e] : merged) {
    e.chi -= static_cast<std::int64_t>(pairs_in[root]);
    e.boundary = boundary[root];
    e.genus = static_cast<int>((2 - e.chi - e.boundary) / 2);
    std::sort(e.in.begin(), e.in.end());
    std::sort(e.out.begin(), e.out.end());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
