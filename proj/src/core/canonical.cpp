#include "fatcob/canonical.hpp"

#include <algorithm>
#include <tuple>

#include "fatcob/error.hpp"

namespace fatcob {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffU;

struct Scratch {
  std::vector<std::uint32_t> label, queue, code, valence, face;
};

thread_local Scratch scratch;

}  // namespace

CanonicalCode canonical_code(const std::vector<std::uint32_t>& sigma, const std::vector<std::uint32_t>& involution,
                             const std::vector<std::uint32_t>& decoration) {
  const std::uint32_t n = static_cast<std::uint32_t>(sigma.size());
  Scratch& s = scratch;
  s.valence.assign(n, 0);
  s.face.assign(n, 0);
  s.label.assign(n, kUnset);
  for (std::uint32_t h = 0; h < n; ++h) {
    if (s.valence[h] == 0) {
      std::uint32_t len = 0, x = h;
      do { ++len; x = sigma[x]; } while (x != h);
      do { s.valence[x] = len; x = sigma[x]; } while (x != h);
    }
    if (s.face[h] == 0) {
      std::uint32_t len = 0, x = h;
      do { ++len; x = sigma[involution[x]]; } while (x != h);
      do { s.face[x] = len; x = sigma[involution[x]]; } while (x != h);
    }
  }
  // Only darts with the smallest isomorphism-invariant key can start the
  // minimal code, which prunes most starts.
  auto key = [&](std::uint32_t h) { return std::make_tuple(s.valence[h], s.face[h], decoration[h]); };
  auto best_key = key(0);
  for (std::uint32_t h = 1; h < n; ++h) best_key = std::min(best_key, key(h));

  CanonicalCode out;
  out.code.assign(1, n);
  bool have = false;
  s.code.resize(3 * n);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (key(start) != best_key) continue;
    for (std::uint32_t d : s.queue) s.label[d] = kUnset;
    s.queue.clear();
    s.label[start] = 0;
    s.queue.push_back(start);
    // 0: equal to best so far, 1: already smaller, 2: larger (abandon)
    int state = have ? 0 : 1;
    std::size_t idx = 0;
    for (std::size_t pos = 0; pos < s.queue.size() && state != 2; ++pos) {
      std::uint32_t d = s.queue[pos];
      for (std::uint32_t x : {sigma[d], involution[d]}) {
        if (s.label[x] == kUnset) {
          s.label[x] = static_cast<std::uint32_t>(s.queue.size());
          s.queue.push_back(x);
        }
      }
      for (std::uint32_t val : {s.label[sigma[d]], s.label[involution[d]], decoration[d]}) {
        if (state == 0) {
          std::uint32_t ref = out.code[1 + idx];
          if (val < ref) state = 1;
          else if (val > ref) { state = 2; break; }
        }
        s.code[idx++] = val;
      }
    }
    if (state == 2) continue;
    if (state == 1) {
      out.code.resize(1);
      out.code.insert(out.code.end(), s.code.begin(), s.code.end());
      out.automorphisms = 1;
      have = true;
    } else {
      ++out.automorphisms;
    }
  }
  for (std::uint32_t d : s.queue) s.label[d] = kUnset;
  s.queue.clear();
  return out;
}

std::string code_to_string(const std::vector<std::vector<std::uint32_t>>& sorted_components) {
  std::string out = "fg";
  for (const auto& c : sorted_components) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

namespace {

std::vector<CanonicalCode> component_codes(const FatGraph& g, const std::vector<std::uint32_t>& decoration) {
  Components comps = connected_components(g);
  std::vector<CanonicalCode> codes;
  std::vector<std::uint32_t> local(g.half_edge_count());
  for (std::size_t c = 0; c < comps.count(); ++c) {
    const auto& hs = comps.half_edges[c];
    if (hs.empty()) {
      codes.push_back(CanonicalCode{{0}, 1});
      continue;
    }
    for (std::size_t k = 0; k < hs.size(); ++k) local[hs[k]] = static_cast<std::uint32_t>(k);
    std::vector<std::uint32_t> sigma(hs.size()), inv(hs.size()), deco(hs.size());
    for (std::size_t k = 0; k < hs.size(); ++k) {
      sigma[k] = local[g.sigma(hs[k])];
      inv[k] = local[FatGraph::involution(hs[k])];
      deco[k] = decoration[hs[k]];
    }
    codes.push_back(canonical_code(sigma, inv, deco));
  }
  return codes;
}

std::string form_from(const FatGraph& g, const std::vector<std::uint32_t>& decoration) {
  auto codes = component_codes(g, decoration);
  std::vector<std::vector<std::uint32_t>> sorted;
  for (auto& c : codes) sorted.push_back(std::move(c.code));
  std::sort(sorted.begin(), sorted.end());
  return code_to_string(sorted);
}

}  // namespace

std::string canonical_form(const FatGraph& g) {
  return form_from(g, std::vector<std::uint32_t>(g.half_edge_count(), 0));
}

std::string canonical_form(const OpenClosedFatGraph& g) {
  const FatGraph& base = g.base();
  std::vector<std::uint32_t> deco(base.half_edge_count(), 0);
  for (std::size_t j = 0; j < g.in_leaves().size(); ++j) {
    VertexId v = g.in_leaves()[j];
    deco[base.rotation(v)[0]] = static_cast<std::uint32_t>(1 + 4 * j + (g.is_closed(v) ? 1 : 0));
  }
  for (std::size_t j = 0; j < g.out_leaves().size(); ++j) {
    VertexId v = g.out_leaves()[j];
    deco[base.rotation(v)[0]] = static_cast<std::uint32_t>(1 + 4 * j + 2 + (g.is_closed(v) ? 1 : 0));
  }
  return form_from(base, deco);
}

bool is_isomorphic(const FatGraph& a, const FatGraph& b) { return canonical_form(a) == canonical_form(b); }

bool is_isomorphic(const OpenClosedFatGraph& a, const OpenClosedFatGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

std::size_t automorphism_count(const FatGraph& g) {
  auto codes = component_codes(g, std::vector<std::uint32_t>(g.half_edge_count(), 0));
  if (codes.size() != 1 || g.edge_count() == 0)
    fail(ErrorCode::InvalidArgument, "automorphism count needs a connected graph with edges");
  return codes[0].automorphisms;
}

}  // namespace fatcob
