#include "fatcob/fatcob.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "fatcob/canonical.hpp"
#include "fatcob/enumerate.hpp"
#include "fatcob/error.hpp"
#include "fatcob/fg_format.hpp"
#include "fatcob/gluing.hpp"
#include "fatcob/homology.hpp"
#include "json.hpp"

struct fc_graph {
  fatcob::OpenClosedFatGraph graph;
};

namespace {

using fatcob::ErrorCode;
using Json = nlohmann::ordered_json;

thread_local std::string last_error;
thread_local std::string last_code;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
fc_status guarded(F&& body) {
  last_error.clear();
  last_code.clear();
  try {
    body();
    return FC_OK;
  } catch (const fatcob::ParseFailure& e) {
    last_error = std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message();
    last_code = fatcob::error_code_name(e.code());
    return FC_ERR_PARSE;
  } catch (const fatcob::Error& e) {
    last_error = e.detail();
    last_code = fatcob::error_code_name(e.code());
    if (e.code() == ErrorCode::InvalidArgument) return FC_ERR_USAGE;
    if (e.code() == ErrorCode::Internal) return FC_ERR_INTERNAL;
    return FC_ERR_DOMAIN;
  } catch (const std::exception& e) {
    last_error = e.what();
    last_code = "Internal";
    return FC_ERR_INTERNAL;
  }
}

void require(const void* p) {
  if (!p) fatcob::fail(ErrorCode::InvalidArgument, "null argument");
}

const char* manifold_name(fatcob::OneManifold m) { return m == fatcob::OneManifold::Circle ? "S1" : "I"; }

fatcob::GluingMatch match_for(const fc_graph* a, const fc_graph* b, int subdivide, fatcob::OpenClosedFatGraph& left,
                              fatcob::OpenClosedFatGraph& right) {
  if (subdivide) {
    fatcob::SubdivisionMatch sm = fatcob::subdivision_match(a->graph, b->graph);
    left = std::move(sm.left);
    right = std::move(sm.right);
    return sm.match;
  }
  left = a->graph;
  right = b->graph;
  return fatcob::gluable(left, right);
}

}  // namespace

extern "C" {

const char* fc_last_error(void) { return last_error.c_str(); }
const char* fc_last_error_code(void) { return last_code.c_str(); }

fc_status fc_graph_parse(const char* text, fc_graph** out) {
  return guarded([&] {
    require(text);
    require(out);
    *out = new fc_graph{fatcob::parse_fg(text)};
  });
}

fc_status fc_graph_load(const char* path, fc_graph** out) {
  return guarded([&] {
    require(path);
    require(out);
    *out = new fc_graph{fatcob::load_fg(path)};
  });
}

void fc_graph_free(fc_graph* g) { delete g; }
void fc_string_free(char* s) { std::free(s); }

fc_status fc_graph_serialize(const fc_graph* g, char** out) {
  return guarded([&] {
    require(g);
    require(out);
    *out = dup(fatcob::serialize_fg(g->graph));
  });
}

fc_status fc_graph_invariants(const fc_graph* g, fc_invariants* out) {
  return guarded([&] {
    require(g);
    require(out);
    fatcob::SurfaceSignature s = fatcob::surface_invariants(g->graph.base());
    *out = {s.components.size(), s.euler_characteristic, s.genus, s.boundary_count};
  });
}

fc_status fc_graph_boundary_cycles(const fc_graph* g, char** json) {
  return guarded([&] {
    require(g);
    require(json);
    const fatcob::FatGraph& base = g->graph.base();
    Json cycles = Json::array();
    for (const auto& c : fatcob::boundary_cycles(base).cycles) {
      Json cycle = Json::array();
      for (fatcob::HalfEdgeId h : c) cycle.push_back(base.half_edge_name(h));
      cycles.push_back(std::move(cycle));
    }
    *json = dup(cycles.dump());
  });
}

fc_status fc_graph_admissible(const fc_graph* g, int* admissible, char** witness) {
  return guarded([&] {
    require(g);
    require(admissible);
    fatcob::AdmissibilityReport r = fatcob::is_admissible(g->graph);
    *admissible = r.admissible ? 1 : 0;
    if (witness) *witness = r.witness ? dup(r.witness->describe(g->graph.base())) : nullptr;
  });
}

fc_status fc_graph_signature(const fc_graph* g, char** json) {
  return guarded([&] {
    require(g);
    require(json);
    fatcob::CobordismSignature s = fatcob::cobordism_signature(g->graph);
    Json out;
    Json source = Json::array(), target = Json::array();
    for (auto m : s.source) source.push_back(manifold_name(m));
    for (auto m : s.target) target.push_back(manifold_name(m));
    out["source"] = source;
    out["target"] = target;
    Json comps = Json::array();
    for (const auto& c : s.components) {
      Json jc;
      jc["genus"] = c.genus;
      jc["boundary"] = c.boundary_count;
      jc["chi"] = c.euler_characteristic;
      jc["in"] = c.in_indices;
      jc["out"] = c.out_indices;
      jc["free"] = c.free;
      comps.push_back(std::move(jc));
    }
    out["components"] = comps;
    *json = dup(out.dump());
  });
}

fc_status fc_graph_glue(const fc_graph* a, const fc_graph* b, int subdivide, fc_graph** out, int* admissible,
                        size_t* interval_pairs) {
  return guarded([&] {
    require(a);
    require(b);
    require(out);
    fatcob::OpenClosedFatGraph left, right;
    fatcob::GluingMatch match = match_for(a, b, subdivide, left, right);
    fatcob::Glued glued = fatcob::glue(left, right, match);
    if (admissible) *admissible = glued.admissibility.admissible ? 1 : 0;
    if (interval_pairs) *interval_pairs = glued.interval_pairs;
    *out = new fc_graph{std::move(glued.graph)};
  });
}

fc_status fc_graph_homology(const fc_graph* g, fc_homology* out) {
  return guarded([&] {
    require(g);
    require(out);
    fatcob::ChainComplexPair c = fatcob::relative_chain_complex(g->graph);
    *out = {c.rank_h1(), c.rank_h0(), fatcob::relative_euler_char(g->graph)};
  });
}

fc_status fc_graph_degree(const fc_graph* g, int dim, int64_t* out) {
  return guarded([&] {
    require(g);
    require(out);
    *out = fatcob::operation_degree(g->graph, dim);
  });
}

fc_status fc_gluing_det(const fc_graph* a, const fc_graph* b, int subdivide, int dim, int64_t* degree, int* sign,
                        char** scalar) {
  return guarded([&] {
    require(a);
    require(b);
    fatcob::OpenClosedFatGraph left, right;
    fatcob::GluingMatch match = match_for(a, b, subdivide, left, right);
    fatcob::GradedLine line = fatcob::gluing_det_iso(left, right, match, dim);
    if (degree) *degree = line.degree;
    if (sign) *sign = line.sign();
    if (scalar) *scalar = dup(line.scalar.get_str());
  });
}

fc_status fc_assoc_sign(int dim, int* sign) {
  return guarded([&] {
    require(sign);
    *sign = fatcob::skew_associativity_sign(dim);
  });
}

fc_status fc_enumerate(const fc_enum_options* options, char** json) {
  return guarded([&] {
    require(options);
    require(json);
    fatcob::EnumerationOptions o;
    o.min_edges = o.max_edges = options->edges;
    o.one_vertex = options->one_vertex != 0;
    if (options->has_genus) o.genus = options->genus;
    o.min_valence = options->min_valence == 0 ? 1 : options->min_valence;
    o.jobs = options->jobs == 0 ? 1 : options->jobs;
    Json out = Json::array();
    for (const auto& c : fatcob::enumerate_fat_graphs(o)) {
      Json jc;
      jc["edges"] = c.representative.edge_count();
      jc["vertices"] = c.representative.vertex_count();
      jc["genus"] = c.surface.genus;
      jc["boundary"] = c.surface.boundary_count;
      jc["chi"] = c.surface.euler_characteristic;
      jc["automorphisms"] = c.automorphisms;
      jc["rootings"] = c.rootings;
      jc["canonical"] = c.canonical;
      out.push_back(std::move(jc));
    }
    *json = dup(out.dump());
  });
}

fc_status fc_graph_canonical(const fc_graph* g, char** out) {
  return guarded([&] {
    require(g);
    require(out);
    *out = dup(fatcob::canonical_form(g->graph));
  });
}

fc_status fc_graph_isomorphic(const fc_graph* a, const fc_graph* b, int* out) {
  return guarded([&] {
    require(a);
    require(b);
    require(out);
    *out = fatcob::is_isomorphic(a->graph, b->graph) ? 1 : 0;
  });
}

}  // extern "C"
