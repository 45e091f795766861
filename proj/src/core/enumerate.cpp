#include "fatcob/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "fatcob/error.hpp"

namespace fatcob {

std::size_t enumeration_bound() {
  const char* env = std::getenv("FATCOB_MAX_EDGES");
  if (env == nullptr || *env == '\0') return kDefaultEdgeBound;
  char* end = nullptr;
  unsigned long value = std::strtoul(env, &end, 10);
  if (end == nullptr || *end != '\0') return kDefaultEdgeBound;
  return static_cast<std::size_t>(value);
}

namespace {

using Code = std::vector<std::uint32_t>;
using Table = std::map<Code, std::size_t>;

void partitions(std::size_t remaining, std::size_t max_part, std::size_t min_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(remaining, max_part); p >= min_part && p >= 1; --p) {
    cur.push_back(p);
    partitions(remaining - p, p, min_part, cur, out);
    cur.pop_back();
  }
}

class PairingSearch {
 public:
  PairingSearch(const std::vector<std::size_t>& parts, Table& table) : table_(table) {
    for (std::size_t v = 0; v < parts.size(); ++v) {
      std::uint32_t first = static_cast<std::uint32_t>(sigma_.size());
      for (std::size_t k = 0; k < parts[v]; ++k) {
        vertex_.push_back(static_cast<std::uint32_t>(v));
        sigma_.push_back(k + 1 < parts[v] ? static_cast<std::uint32_t>(sigma_.size() + 1) : first);
      }
    }
    vertices_ = parts.size();
    inv_.assign(sigma_.size(), kFree);
    decoration_.assign(sigma_.size(), 0);
  }

  void run() { pair_from(0); }

 private:
  static constexpr std::uint32_t kFree = 0xffffffffU;

  void pair_from(std::uint32_t d) {
    const std::uint32_t n = static_cast<std::uint32_t>(sigma_.size());
    while (d < n && inv_[d] != kFree) ++d;
    if (d == n) {
      record();
      return;
    }
    for (std::uint32_t e = d + 1; e < n; ++e) {
      if (inv_[e] != kFree) continue;
      inv_[d] = e;
      inv_[e] = d;
      pair_from(d + 1);
      inv_[d] = inv_[e] = kFree;
    }
  }

  bool connected() const {
    std::uint64_t seen = 1, frontier = 1;
    std::vector<std::uint64_t> adj(vertices_, 0);
    for (std::size_t h = 0; h < sigma_.size(); ++h) adj[vertex_[h]] |= std::uint64_t{1} << vertex_[inv_[h]];
    while (frontier) {
      std::uint64_t next = 0;
      for (std::size_t v = 0; v < vertices_; ++v)
        if (frontier & (std::uint64_t{1} << v)) next |= adj[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (vertices_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertices_) - 1);
  }

  void record() {
    if (!connected()) return;
    CanonicalCode c = canonical_code(sigma_, inv_, decoration_);
    table_.try_emplace(std::move(c.code), c.automorphisms);
  }

  Table& table_;
  std::vector<std::uint32_t> sigma_, inv_, vertex_, decoration_;
  std::size_t vertices_ = 0;
};

// Rebuilds the graph encoded by a canonical code: dart k has sigma and
// involution images read from entries 3k+1 and 3k+2.
FatGraph decode(const Code& code) {
  const std::size_t n = code[0];
  std::vector<HalfEdgeId> sigma(n), inv(n);
  for (std::size_t k = 0; k < n; ++k) {
    sigma[k] = code[1 + 3 * k];
    inv[k] = code[2 + 3 * k];
  }
  std::vector<VertexId> source(n, kNoCell);
  std::size_t vertices = 0;
  for (std::size_t h = 0; h < n; ++h) {
    if (source[h] != kNoCell) continue;
    std::size_t x = h;
    do {
      source[x] = vertices;
      x = sigma[x];
    } while (x != h);
    ++vertices;
  }
  return FatGraph::from_maps(vertices, source, inv, sigma);
}

}  // namespace

std::vector<FatGraphClass> enumerate_fat_graphs(const EnumerationOptions& options) {
  const std::size_t bound = enumeration_bound();
  if (options.max_edges > bound)
    fail(ErrorCode::BoundExceeded, "max_edges " + std::to_string(options.max_edges) + " exceeds the bound " +
                                       std::to_string(bound) + " (set FATCOB_MAX_EDGES to raise it)");

  std::vector<FatGraphClass> classes;
  if (options.min_edges == 0) {
    if (!options.one_vertex) {
      FatGraphClass empty;
      empty.canonical = canonical_form(empty.representative);
      empty.rootings = 0;
      classes.push_back(std::move(empty));
    }
    if (options.allow_isolated) {
      FatGraphClass iso;
      iso.representative = FatGraph::create({{"v0", true}}, {}, {});
      iso.canonical = canonical_form(iso.representative);
      iso.rootings = 0;
      classes.push_back(std::move(iso));
    }
  }

  for (std::size_t n = std::max<std::size_t>(options.min_edges, 1); n <= options.max_edges; ++n) {
    std::vector<std::vector<std::size_t>> parts;
    if (options.one_vertex) {
      if (2 * n >= options.min_valence) parts.push_back({2 * n});
    } else {
      std::vector<std::size_t> cur;
      partitions(2 * n, 2 * n, std::max<std::size_t>(options.min_valence, 1), cur, parts);
    }
    // Workers take partitions round-robin; the merge is a set union keyed
    // by canonical code, so the result does not depend on scheduling.
    const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(parts.size())));
    std::vector<Table> tables(jobs);
    auto work = [&](unsigned w) {
      for (std::size_t k = w; k < parts.size(); k += jobs) PairingSearch(parts[k], tables[w]).run();
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    Table merged;
    for (auto& t : tables) merged.merge(t);

    for (const auto& [code, aut] : merged) {
      FatGraphClass c;
      c.representative = decode(code);
      c.canonical = canonical_form(c.representative);
      c.automorphisms = aut;
      c.rootings = 2 * n / aut;
      c.surface = surface_invariants(c.representative);
      classes.push_back(std::move(c));
    }
  }

  std::vector<FatGraphClass> kept;
  for (auto& c : classes) {
    if (options.genus && c.surface.genus != *options.genus) continue;
    if (options.boundary_count && c.surface.boundary_count != *options.boundary_count) continue;
    kept.push_back(std::move(c));
  }
  std::stable_sort(kept.begin(), kept.end(), [](const FatGraphClass& a, const FatGraphClass& b) {
    return std::make_tuple(a.representative.edge_count(), a.representative.vertex_count(), a.canonical) <
           std::make_tuple(b.representative.edge_count(), b.representative.vertex_count(), b.canonical);
  });
  return kept;
}

std::vector<OpenClosedClass> enumerate_open_closed(const OpenClosedEnumerationOptions& options) {
  EnumerationOptions base_options;
  base_options.min_edges = 1;
  base_options.max_edges = options.max_edges;
  base_options.min_valence = options.min_valence;
  auto classes = enumerate_fat_graphs(base_options);

  std::map<std::string, OpenClosedFatGraph> found;
  for (const auto& cls : classes) {
    const FatGraph& g = cls.representative;
    std::vector<VertexId> leaves;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.valence(v) == 1) leaves.push_back(v);
    std::size_t assignments = 1;
    for (std::size_t k = 0; k < leaves.size(); ++k) assignments *= 3;
    for (std::size_t a = 0; a < assignments; ++a) {
      std::vector<VertexId> ins, outs;
      std::size_t code = a;
      for (VertexId leaf : leaves) {
        if (code % 3 == 1) ins.push_back(leaf);
        if (code % 3 == 2) outs.push_back(leaf);
        code /= 3;
      }
      std::vector<VertexId> special = ins;
      special.insert(special.end(), outs.begin(), outs.end());
      for (std::size_t mask = 0; mask < (std::size_t{1} << special.size()); ++mask) {
        std::vector<VertexId> closed;
        for (std::size_t k = 0; k < special.size(); ++k)
          if (mask & (std::size_t{1} << k)) closed.push_back(special[k]);
        std::vector<VertexId> in_order = ins;
        do {
          std::vector<VertexId> out_order = outs;
          do {
            OpenClosedFatGraph oc;
            try {
              oc = decorate(g, in_order, out_order, closed);
            } catch (const Error&) {
              continue;
            }
            if (options.admissible_only && !is_admissible(oc).admissible) continue;
            if (options.source || options.target) {
              std::vector<OneManifold> src, tgt;
              for (VertexId v : in_order) src.push_back(oc.is_closed(v) ? OneManifold::Circle : OneManifold::Interval);
              for (VertexId v : out_order) tgt.push_back(oc.is_closed(v) ? OneManifold::Circle : OneManifold::Interval);
              if (options.source && src != *options.source) continue;
              if (options.target && tgt != *options.target) continue;
            }
            std::string key = canonical_form(oc);
            found.try_emplace(std::move(key), std::move(oc));
          } while (options.all_orderings && std::next_permutation(out_order.begin(), out_order.end()));
        } while (options.all_orderings && std::next_permutation(in_order.begin(), in_order.end()));
      }
    }
  }

  std::vector<OpenClosedClass> out;
  for (auto& [key, g] : found) out.push_back(OpenClosedClass{std::move(g), key});
  std::stable_sort(out.begin(), out.end(), [](const OpenClosedClass& a, const OpenClosedClass& b) {
    return a.graph.base().edge_count() < b.graph.base().edge_count();
  });
  return out;
}

}  // namespace fatcob
