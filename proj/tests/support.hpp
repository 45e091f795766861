#pragma once

#include <string>
#include <vector>

#include "fatcob/fg_format.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) {
  return std::string(FATCOB_TEST_DIR) + "/fixtures/" + name + ".fg";
}

inline fatcob::OpenClosedFatGraph fixture(const std::string& name) { return fatcob::load_fg(fixture_path(name)); }

// Surface invariants are undefined for graphs with an isolated vertex, which
// is what collapsing a whole undecorated tree produces.
inline bool has_isolated_vertex(const fatcob::OpenClosedFatGraph& g) {
  for (fatcob::VertexId v = 0; v < g.base().vertex_count(); ++v)
    if (g.base().is_isolated(v)) return true;
  return false;
}

// Every well-formed fixture.
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "cap_empty_circle", "coflaps",         "cylinder",        "cylinder_free_hole", "cylinder_genus_one",
      "flaps",            "genus_two_rose",  "isolated_point",  "mouthpiece",         "mouthpiece_backward",
      "pants",            "single_loop",     "six_leaf",        "strip",              "theta",
      "torus_two_boundary", "two_petal_inadmissible"};
  return names;
}

// Fixtures that are admissible and free of isolated vertices.
inline const std::vector<std::string>& admissible_fixture_names() {
  static const std::vector<std::string> names = {
      "coflaps",    "cylinder",            "cylinder_free_hole", "cylinder_genus_one", "flaps", "genus_two_rose",
      "mouthpiece", "mouthpiece_backward", "pants",              "single_loop",        "six_leaf", "strip",
      "theta",      "torus_two_boundary"};
  return names;
}

}  // namespace support

#include <utility>

#include "fatcob/gluing.hpp"

namespace support {

// Fixtures with boundary plus a few disjoint unions, for composition tests.
inline std::vector<std::pair<std::string, fatcob::OpenClosedFatGraph>> gluing_pieces() {
  std::vector<std::pair<std::string, fatcob::OpenClosedFatGraph>> out;
  for (const char* name : {"cylinder", "pants", "mouthpiece", "mouthpiece_backward", "flaps", "coflaps", "strip",
                           "cylinder_genus_one", "cylinder_free_hole", "six_leaf"})
    out.emplace_back(name, fixture(name));
  auto add_union = [&](const char* a, const char* b) {
    out.emplace_back(std::string(a) + "+" + b, fatcob::disjoint_union(fixture(a), fixture(b)).graph);
  };
  add_union("cylinder", "cylinder");
  add_union("cylinder", "strip");
  add_union("strip", "cylinder");
  add_union("strip", "strip");
  add_union("pants", "cylinder");
  add_union("mouthpiece", "strip");
  return out;
}

struct Composition {
  std::string name;
  fatcob::OpenClosedFatGraph left, right;
};

// Ordered pairs whose outgoing and incoming boundaries agree.
inline std::vector<Composition> composable_pairs() {
  std::vector<Composition> out;
  auto pieces = gluing_pieces();
  for (const auto& [na, a] : pieces)
    for (const auto& [nb, b] : pieces) {
      auto ta = fatcob::cobordism_signature(a).target;
      auto sb = fatcob::cobordism_signature(b).source;
      if (ta.empty() || ta != sb) continue;
      out.push_back({na + " # " + nb, a, b});
    }
  return out;
}

}  // namespace support
