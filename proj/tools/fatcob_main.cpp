// Command-line front end. Every subcommand calls one C API entry point and
// formats what comes back.
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fatcob/fatcob.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 3;

struct Failure {
  int exit_code;
};

struct GraphDeleter {
  void operator()(fc_graph* g) const { fc_graph_free(g); }
};
using Graph = std::unique_ptr<fc_graph, GraphDeleter>;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { fc_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

void check(fc_status s) {
  if (s == FC_OK) return;
  std::string code = fc_last_error_code();
  switch (s) {
    case FC_ERR_PARSE:
      std::cerr << "parse error: " << fc_last_error() << '\n';
      throw Failure{kExitParse};
    case FC_ERR_USAGE:
      std::cerr << "usage error: " << fc_last_error() << '\n';
      throw Failure{kExitUsage};
    case FC_ERR_INTERNAL:
      std::cerr << "internal error: " << fc_last_error() << '\n';
      throw Failure{kExitDomain};
    default:
      std::cerr << "error: " << code << ": " << fc_last_error() << '\n';
      throw Failure{kExitDomain};
  }
}

Graph load(const std::string& path) {
  fc_graph* g = nullptr;
  check(fc_graph_load(path.c_str(), &g));
  return Graph(g);
}

std::string join_manifolds(const Json& list) {
  if (list.empty()) return "0";
  std::string out;
  for (const auto& m : list) out += (out.empty() ? "" : "+") + m.get<std::string>();
  return out;
}

std::string join_indices(const Json& list) {
  if (list.empty()) return "-";
  std::string out;
  for (const auto& i : list) out += (out.empty() ? "" : ",") + std::to_string(i.get<std::size_t>());
  return out;
}

std::string signed_int(long long v) { return (v > 0 ? "+" : "") + std::to_string(v); }

struct Outcome {
  std::string text;  // printed without --json
  Json result;
  std::vector<std::string> warnings;
  int exit_code = 0;
};

const CLI::Validator kNonNegative(
    [](std::string& s) -> std::string {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        return "expected a non-negative integer, got '" + s + "'";
      return {};
    },
    "UINT");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open-closed fat graphs: invariants, gluing, homology and determinant signs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit a JSON report");

  std::string file_a, file_b;
  int dim = 1;
  bool subdivide = false;
  std::size_t edges = 0;
  bool one_vertex = false;
  std::optional<int> genus;
  std::size_t min_valence = 1;
  unsigned jobs = 1;

  auto one_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file_a, "Graph file (.fg)")->required();
    return sub;
  };
  auto* validate = one_file("validate", "Check a graph file");
  auto* invariants = one_file("invariants", "Components, Euler characteristic, genus, boundary count");
  auto* boundary = one_file("boundary", "Boundary cycles");
  auto* admissible = one_file("admissible", "Admissibility of the incoming circles");
  auto* signature = one_file("signature", "Cobordism signature");
  auto* homology = one_file("homology", "Ranks of H1 and H0 relative to the incoming boundary");
  auto* degree = one_file("degree", "Degree of the string-topology operation");
  degree->add_option("--dim", dim, "Manifold dimension")->required()->check(kNonNegative);
  auto* canon = one_file("canon", "Canonical form");

  auto* glue = app.add_subcommand("glue", "Glue the outgoing leaves of a to the incoming leaves of b");
  glue->add_option("a", file_a)->required();
  glue->add_option("b", file_b)->required();
  glue->add_flag("--subdivide", subdivide, "Subdivide edges until the boundary circles match");

  auto* det_sign = app.add_subcommand("det-sign", "Sign of the gluing isomorphism on determinant lines");
  det_sign->add_option("a", file_a)->required();
  det_sign->add_option("b", file_b)->required();
  det_sign->add_option("--dim", dim, "Tensor power")->check(kNonNegative);
  det_sign->add_flag("--subdivide", subdivide, "Subdivide edges until the boundary circles match");

  auto* assoc = app.add_subcommand("assoc-sign", "Sign relating the two bracketings of three pants");
  assoc->add_option("--dim", dim, "Manifold dimension")->required()->check(kNonNegative);

  auto* enumerate = app.add_subcommand("enumerate", "Connected fat graphs with a given number of edges");
  enumerate->add_option("--edges", edges, "Number of edges")->required();
  enumerate->add_flag("--one-vertex", one_vertex, "Only one-vertex graphs");
  enumerate->add_option("--genus", genus, "Only this genus");
  enumerate->add_option("--min-valence", min_valence, "Smallest vertex valence")->check(CLI::PositiveNumber);
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* iso = app.add_subcommand("iso", "Whether two graphs are isomorphic");
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Json inputs = Json::object();
  if (!file_a.empty()) inputs["files"].push_back(file_a);
  if (!file_b.empty()) inputs["files"].push_back(file_b);

  Outcome o;
  try {
    if (sub == validate) {
      Graph g = load(file_a);
      o.text = "valid\n";
      o.result["valid"] = true;
    } else if (sub == invariants) {
      Graph g = load(file_a);
      fc_invariants inv{};
      check(fc_graph_invariants(g.get(), &inv));
      std::ostringstream s;
      s << "components=" << inv.components << " chi=" << inv.euler_characteristic << " genus=" << inv.genus
        << " boundary=" << inv.boundary_count << '\n';
      o.text = s.str();
      o.result["components"] = inv.components;
      o.result["chi"] = inv.euler_characteristic;
      o.result["genus"] = inv.genus;
      o.result["boundary"] = inv.boundary_count;
    } else if (sub == boundary) {
      Graph g = load(file_a);
      OwnedString js;
      check(fc_graph_boundary_cycles(g.get(), &js.p));
      o.result["cycles"] = Json::parse(js.str());
      for (const auto& c : o.result["cycles"]) {
        std::string line;
        for (const auto& h : c) line += (line.empty() ? "" : " ") + h.get<std::string>();
        o.text += "(" + line + ")\n";
      }
    } else if (sub == admissible) {
      Graph g = load(file_a);
      int ok = 0;
      OwnedString witness;
      check(fc_graph_admissible(g.get(), &ok, &witness.p));
      o.result["admissible"] = ok != 0;
      if (ok) {
        o.text = "admissible\n";
      } else {
        o.result["witness"] = witness.str();
        o.text = "not admissible: " + witness.str() + "\n";
        o.exit_code = kExitDomain;
      }
    } else if (sub == signature) {
      Graph g = load(file_a);
      OwnedString js;
      check(fc_graph_signature(g.get(), &js.p));
      o.result = Json::parse(js.str());
      o.text = "source=" + join_manifolds(o.result["source"]) + " target=" + join_manifolds(o.result["target"]) + "\n";
      std::size_t k = 0;
      for (const auto& c : o.result["components"]) {
        std::ostringstream s;
        s << "component " << k++ << ": genus=" << c["genus"].get<int>() << " boundary=" << c["boundary"].get<int>()
          << " chi=" << c["chi"].get<long long>() << " in=" << join_indices(c["in"])
          << " out=" << join_indices(c["out"]) << " free=" << c["free"].get<int>() << '\n';
        o.text += s.str();
      }
    } else if (sub == glue) {
      Graph a = load(file_a), b = load(file_b);
      fc_graph* raw = nullptr;
      int ok = 0;
      std::size_t intervals = 0;
      check(fc_graph_glue(a.get(), b.get(), subdivide ? 1 : 0, &raw, &ok, &intervals));
      Graph glued(raw);
      OwnedString text;
      check(fc_graph_serialize(glued.get(), &text.p));
      o.text = text.str();
      o.result["graph"] = text.str();
      o.result["admissible"] = ok != 0;
      o.result["interval_pairs"] = intervals;
      if (!ok) o.warnings.push_back("glued graph is not admissible");
      inputs["subdivide"] = subdivide;
    } else if (sub == homology) {
      Graph g = load(file_a);
      fc_homology h{};
      check(fc_graph_homology(g.get(), &h));
      o.text = "H1=" + std::to_string(h.rank_h1) + " H0=" + std::to_string(h.rank_h0) + "\n";
      o.result["rank_h1"] = h.rank_h1;
      o.result["rank_h0"] = h.rank_h0;
      o.result["relative_euler"] = h.relative_euler;
    } else if (sub == degree) {
      Graph g = load(file_a);
      int64_t deg = 0;
      check(fc_graph_degree(g.get(), dim, &deg));
      o.text = std::to_string(deg) + "\n";
      o.result["degree"] = deg;
      inputs["dim"] = dim;
    } else if (sub == det_sign) {
      Graph a = load(file_a), b = load(file_b);
      int64_t deg = 0;
      int sign = 0;
      OwnedString scalar;
      check(fc_gluing_det(a.get(), b.get(), subdivide ? 1 : 0, dim, &deg, &sign, &scalar.p));
      o.text = "degree=" + std::to_string(deg) + " sign=" + signed_int(sign) + " scalar=" + scalar.str() + "\n";
      o.result["degree"] = deg;
      o.result["sign"] = sign;
      o.result["scalar"] = scalar.str();
      inputs["dim"] = dim;
      inputs["subdivide"] = subdivide;
    } else if (sub == assoc) {
      int sign = 0;
      check(fc_assoc_sign(dim, &sign));
      o.text = signed_int(sign) + "\n";
      o.result["sign"] = sign;
      inputs["dim"] = dim;
    } else if (sub == enumerate) {
      fc_enum_options opt{edges, one_vertex ? 1 : 0, genus ? 1 : 0, genus.value_or(0), min_valence, jobs};
      OwnedString js;
      check(fc_enumerate(&opt, &js.p));
      Json classes = Json::parse(js.str());
      std::size_t rootings = 0;
      for (const auto& c : classes) {
        std::ostringstream s;
        s << "edges=" << c["edges"].get<std::size_t>() << " vertices=" << c["vertices"].get<std::size_t>()
          << " genus=" << c["genus"].get<int>() << " boundary=" << c["boundary"].get<int>()
          << " aut=" << c["automorphisms"].get<std::size_t>() << " rootings=" << c["rootings"].get<std::size_t>()
          << ' ' << c["canonical"].get<std::string>() << '\n';
        o.text += s.str();
        rootings += c["rootings"].get<std::size_t>();
      }
      o.text += "classes=" + std::to_string(classes.size()) + " rootings=" + std::to_string(rootings) + "\n";
      o.result["classes"] = classes;
      o.result["rootings"] = rootings;
      inputs["edges"] = edges;
      inputs["one_vertex"] = one_vertex;
      if (genus) inputs["genus"] = *genus;
      inputs["min_valence"] = min_valence;
    } else if (sub == canon) {
      Graph g = load(file_a);
      OwnedString s;
      check(fc_graph_canonical(g.get(), &s.p));
      o.text = s.str() + "\n";
      o.result["canonical"] = s.str();
    } else if (sub == iso) {
      Graph a = load(file_a), b = load(file_b);
      int same = 0;
      check(fc_graph_isomorphic(a.get(), b.get(), &same));
      o.text = same ? "isomorphic\n" : "not isomorphic\n";
      o.result["isomorphic"] = same != 0;
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }

  if (json) {
    Json report;
    report["command"] = sub->get_name();
    report["inputs"] = inputs;
    report["result"] = o.result;
    report["warnings"] = o.warnings;
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << o.text;
    for (const auto& w : o.warnings) std::cerr << "warning: " << w << '\n';
  }
  return o.exit_code;
}
