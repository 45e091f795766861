// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any fails. With --update-golden it rewrites the CLI golden files instead.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "census.hpp"
#include "fatcob/canonical.hpp"
#include "fatcob/enumerate.hpp"
#include "fatcob/error.hpp"
#include "fatcob/fg_format.hpp"
#include "fatcob/gluing.hpp"
#include "fatcob/homology.hpp"
#include "fatcob/morphism.hpp"
#include "oracles/oracles.hpp"
#include "relabel.hpp"
#include "support.hpp"

using namespace fatcob;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_ms, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (limit_ms > 0) out.require(ms < limit_ms, "took " + std::to_string(ms) + " ms");
  if (!out.ok) ++failures;
  std::printf("%s %2d %s (%.1f ms)%s%s\n", out.ok ? "PASS" : "FAIL", n, title.c_str(), ms,
              out.note.empty() ? "" : ": ", out.note.c_str());
  std::fflush(stdout);
}

std::string cycle_string(const FatGraph& g, const std::vector<HalfEdgeId>& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + g.half_edge_name(c[k]);
  return s + ")";
}

// Collapsing a forest keeps the surface and the cobordism.
void check_preserves(Outcome& out, const Morphism& m) {
  if (support::has_isolated_vertex(m.target())) return;
  SurfaceSignature a = surface_invariants(m.source().base()), b = surface_invariants(m.target().base());
  out.require(a.genus == b.genus && a.boundary_count == b.boundary_count &&
                  a.euler_characteristic == b.euler_characteristic,
              "morphism changes (g, b, chi)");
  out.require(equivalent(cobordism_signature(m.source()), cobordism_signature(m.target())),
              "morphism changes the cobordism signature");
}

OpenClosedFatGraph glue_subdivided(const OpenClosedFatGraph& a, const OpenClosedFatGraph& b) {
  SubdivisionMatch sm = subdivision_match(a, b);
  return glue(sm.left, sm.right, sm.match).graph;
}

// Bivalent vertices left by subdivision are smoothed before comparing.
std::string smoothed_canonical(const OpenClosedFatGraph& g) { return canonical_form(smooth_bivalent(g).graph); }

// ---- golden files ----

struct GoldenCase {
  std::string name, args;
};

std::vector<GoldenCase> golden_cases() {
  std::ifstream in(std::string(FATCOB_TEST_DIR) + "/golden/cases.txt");
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto bar = line.find('|');
    if (bar == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    cases.push_back({trim(line.substr(0, bar)), trim(line.substr(bar + 1))});
  }
  return cases;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// stdout, then stderr, then the exit status, run from the tests directory so
// that file names in the output are relative.
std::string run_cli(const std::string& args) {
  fs::path err = fs::temp_directory_path() / ("fatcob_golden_" + std::to_string(::getpid()) + ".err");
  std::string cmd = "cd '" + std::string(FATCOB_TEST_DIR) + "' && '" + FATCOB_CLI_PATH + "' " + args + " 2>'" +
                    err.string() + "'; echo \"[exit $?]\"";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "popen failed";
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  auto tail = out.rfind("[exit ");
  std::string status = out.substr(tail);
  out.erase(tail);
  std::string errors = read_file(err);
  fs::remove(err);
  return out + "--- stderr\n" + errors + status;
}

fs::path golden_path(const std::string& name) { return fs::path(FATCOB_TEST_DIR) / "golden" / (name + ".out"); }

int update_golden() {
  for (const auto& c : golden_cases()) {
    std::ofstream(golden_path(c.name), std::ios::binary) << run_cli(c.args);
    std::printf("wrote %s\n", golden_path(c.name).string().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "--update-golden") return update_golden();

  criterion(1, "torus with two boundary cycles", 1.0, [](Outcome& out) {
    OpenClosedFatGraph g = support::fixture("torus_two_boundary");
    auto start = Clock::now();
    BoundaryCycles bc = boundary_cycles(g.base());
    SurfaceSignature s = surface_invariants(g.base());
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    out.require(bc.cycles.size() == 2, "expected two cycles");
    if (bc.cycles.size() == 2) {
      // A..H = A.0 B.0 C.0 D.0 A.1 B.1 C.1 D.1, so (AFCH)(BGDE).
      out.require(cycle_string(g.base(), bc.cycles[0]) == "(A.0 B.1 C.0 D.1)", "first cycle");
      out.require(cycle_string(g.base(), bc.cycles[1]) == "(A.1 B.0 C.1 D.0)", "second cycle");
    }
    out.require(s.euler_characteristic == -2 && s.genus == 1 && s.boundary_count == 2, "(chi, g, b)");
    out.require(ms < 1.0, "computation slower than 1 ms");
  });

  criterion(2, "genus agrees with polygon gluing up to 6 edges", 60000.0, [](Outcome& out) {
    EnumerationOptions o;
    o.min_edges = 1;
    o.max_edges = 6;
    o.jobs = 4;
    std::size_t n = 0;
    for (const auto& c : enumerate_fat_graphs(o)) {
      oracle::PolygonSurface p = oracle::polygon_gluing(c.representative);
      out.require(p.genus.size() == 1 && p.genus[0] == c.surface.genus, "genus mismatch on " + c.canonical);
      out.require(static_cast<int>(p.boundary[0]) == c.surface.boundary_count, "boundary mismatch on " + c.canonical);
      ++n;
    }
    out.require(n > 1000, "census unexpectedly small");
    out.note = out.ok ? std::to_string(n) + " classes" : out.note;
  });

  criterion(3, "one-vertex census matches pairing counts", 10000.0, [](Outcome& out) {
    const std::vector<std::vector<std::uint64_t>> expected = {{1, 0}, {2, 1}, {5, 10}};
    const std::uint64_t totals[] = {1, 3, 15};
    for (unsigned n = 1; n <= 3; ++n) {
      EnumerationOptions o;
      o.min_edges = o.max_edges = n;
      o.one_vertex = true;
      std::vector<std::uint64_t> dist;
      std::uint64_t total = 0;
      for (const auto& c : enumerate_fat_graphs(o)) {
        if (dist.size() <= static_cast<std::size_t>(c.surface.genus)) dist.resize(c.surface.genus + 1);
        dist[c.surface.genus] += c.rootings;
        total += c.rootings;
      }
      std::vector<std::uint64_t> brute = oracle::pairing_genus_distribution(n);
      dist.resize(brute.size());
      out.require(total == totals[n - 1], "pairing count for n=" + std::to_string(n));
      out.require(dist == brute, "distribution vs brute force for n=" + std::to_string(n));
      std::vector<std::uint64_t> padded = expected[n - 1];
      padded.resize(std::max(padded.size(), dist.size()));
      dist.resize(padded.size());
      out.require(dist == padded, "distribution for n=" + std::to_string(n));
    }
  });

  criterion(4, "morphisms compose, associate and preserve invariants", 0, [](Outcome& out) {
    std::size_t singles = 0, pairs = 0, triples = 0;
    for (const auto& g : census::open_closed(4, false)) {
      for (const auto& c1 : census::collapses(g)) {
        ++singles;
        out.require(validate_morphism(c1.morphism).valid, "collapse not valid");
        check_preserves(out, c1.morphism);
        for (const auto& c2 : census::collapses(c1.graph)) {
          ++pairs;
          Morphism m21 = compose(c2.morphism, c1.morphism);
          out.require(validate_morphism(m21).valid, "composite not valid");
          check_preserves(out, m21);
          for (const auto& c3 : census::collapses(c2.graph)) {
            ++triples;
            out.require(compose(c3.morphism, m21) == compose(compose(c3.morphism, c2.morphism), c1.morphism),
                        "composition not associative");
          }
        }
        out.require(compose(Morphism::identity(c1.graph), c1.morphism) == c1.morphism, "left identity");
        out.require(compose(c1.morphism, Morphism::identity(g)) == c1.morphism, "right identity");
      }
    }
    out.require(triples > 0, "no composable triples");
    if (out.ok)
      out.note = std::to_string(singles) + " morphisms, " + std::to_string(pairs) + " pairs, " +
                 std::to_string(triples) + " triples";
  });

  criterion(5, "gluing arithmetic and associativity", 0, [](Outcome& out) {
    auto pairs = support::composable_pairs();
    out.require(pairs.size() >= 20, "fewer than 20 compositions");
    for (const auto& p : pairs) {
      SubdivisionMatch sm = subdivision_match(p.left, p.right);
      Glued g = glue(sm.left, sm.right, sm.match);
      std::int64_t chi1 = surface_invariants(p.left.base()).euler_characteristic;
      std::int64_t chi2 = surface_invariants(p.right.base()).euler_characteristic;
      out.require(surface_invariants(g.graph.base()).euler_characteristic ==
                      chi1 + chi2 - static_cast<std::int64_t>(g.interval_pairs),
                  "chi of " + p.name);
      auto expected = oracle::glued_signature(cobordism_signature(p.left), cobordism_signature(p.right));
      auto actual = oracle::as_expected(cobordism_signature(g.graph));
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      out.require(expected == actual, "signature of " + p.name);
    }
    auto pieces = support::gluing_pieces();
    std::size_t triples = 0;
    for (const auto& [na, a] : pieces)
      for (const auto& [nb, b] : pieces)
        for (const auto& [nc, c] : pieces) {
          auto ta = cobordism_signature(a).target, sb = cobordism_signature(b).source;
          auto tb = cobordism_signature(b).target, sc = cobordism_signature(c).source;
          if (ta.empty() || tb.empty() || ta != sb || tb != sc) continue;
          ++triples;
          std::string left = smoothed_canonical(glue_subdivided(glue_subdivided(a, b), c));
          std::string right = smoothed_canonical(glue_subdivided(a, glue_subdivided(b, c)));
          out.require(left == right, "associativity on " + na + " # " + nb + " # " + nc);
        }
    out.require(triples > 0, "no matched triples");
    if (out.ok) out.note = std::to_string(pairs.size()) + " pairs, " + std::to_string(triples) + " triples";
  });

  criterion(6, "relative homology ranks", 0, [](Outcome& out) {
    const std::pair<const char*, std::pair<std::size_t, std::size_t>> named[] = {
        {"cylinder", {0, 0}}, {"pants", {1, 0}}, {"mouthpiece", {1, 0}}, {"flaps", {1, 0}}};
    for (const auto& [name, ranks] : named) {
      ChainComplexPair c = relative_chain_complex(support::fixture(name));
      out.require(c.rank_h1() == ranks.first && c.rank_h0() == ranks.second, std::string("ranks of ") + name);
    }
    std::size_t n = 0;
    for (const auto& g : census::open_closed(4, false)) {
      ChainComplexPair c = relative_chain_complex(g);
      IncomingPartition p = incoming_partition(g);
      out.require(static_cast<std::int64_t>(c.rank_h0()) - static_cast<std::int64_t>(c.rank_h1()) ==
                      static_cast<std::int64_t>(p.e_v.size()) - static_cast<std::int64_t>(p.e_e.size()),
                  "rank difference on " + canonical_form(g));
      oracle::RelativeRanks r = oracle::relative_ranks(g);
      out.require(r.h1 == c.rank_h1() && r.h0 == c.rank_h0(), "ranks vs oracle on " + canonical_form(g));
      ++n;
    }
    if (out.ok) out.note = std::to_string(n) + " census graphs";
  });

  criterion(7, "operation degree", 0, [](Outcome& out) {
    for (int d = 1; d <= 3; ++d) {
      out.require(operation_degree(support::fixture("pants"), d) == -d, "pants");
      out.require(operation_degree(support::fixture("flaps"), d) == -d, "flaps");
      out.require(operation_degree(support::fixture("cylinder"), d) == 0, "cylinder");
    }
  });

  criterion(8, "determinant sign calculus", 0, [](Outcome& out) {
    std::size_t composables = 0, fixture_morphisms = 0;
    for (const auto& g : census::open_closed(4, false)) {
      for (const auto& c1 : census::collapses(g, true)) {
        int s1 = morphism_det_sign(c1.morphism);
        for (const auto& c2 : census::collapses(c1.graph, true)) {
          out.require(morphism_det_sign(compose(c2.morphism, c1.morphism)) == s1 * morphism_det_sign(c2.morphism),
                      "functoriality on " + canonical_form(g));
          ++composables;
        }
      }
    }
    for (const auto& name : support::admissible_fixture_names()) {
      OpenClosedFatGraph g = support::fixture(name);
      for (const auto& c : census::collapses(g, true)) {
        MorphismDeterminant d = morphism_determinant(c.morphism);
        out.require(d.forward_sign == d.section_sign, "routes disagree on " + name);
        ++fixture_morphisms;
      }
    }
    for (int d = 0; d <= 3; ++d)
      out.require(skew_associativity_sign(d) == (d % 2 == 0 ? 1 : -1), "skew sign for d=" + std::to_string(d));
    if (out.ok)
      out.note = std::to_string(composables) + " composable pairs, " + std::to_string(fixture_morphisms) +
                 " fixture collapses";
  });

  criterion(9, "canonical form", 0, [](Outcome& out) {
    std::mt19937 rng(20261016);
    for (const auto& name : support::fixture_names()) {
      OpenClosedFatGraph g = support::fixture(name);
      std::string code = canonical_form(g);
      for (int k = 0; k < 200; ++k)
        out.require(canonical_form(support::relabel(g, rng)) == code, "relabeling changes " + name);
    }
    EnumerationOptions o;
    o.min_edges = 1;
    o.max_edges = 5;
    std::set<std::string> seen;
    std::size_t n = 0;
    for (const auto& c : enumerate_fat_graphs(o)) {
      out.require(seen.insert(c.canonical).second, "duplicate string " + c.canonical);
      ++n;
    }
    OpenClosedEnumerationOptions oc;
    oc.max_edges = 3;
    std::set<std::string> seen_oc;
    for (const auto& c : enumerate_open_closed(oc)) {
      out.require(seen_oc.insert(c.canonical).second, "duplicate open-closed string " + c.canonical);
      ++n;
    }
    if (out.ok) out.note = std::to_string(n) + " classes";
  });

  criterion(10, "CLI golden files and round trips", 0, [](Outcome& out) {
    auto cases = golden_cases();
    out.require(!cases.empty(), "no golden cases");
    for (const auto& c : cases) {
      fs::path p = golden_path(c.name);
      out.require(fs::exists(p), "missing golden file " + c.name);
      out.require(read_file(p) == run_cli(c.args), "output differs for " + c.name);
    }
    for (const auto& name : support::fixture_names()) {
      OpenClosedFatGraph g = support::fixture(name);
      OpenClosedFatGraph back = parse_fg(serialize_fg(g));
      out.require(is_isomorphic(back, g) && back == g, "round trip of " + name);
    }
    for (const auto& g : census::open_closed(3, false)) {
      OpenClosedFatGraph back = parse_fg(serialize_fg(g));
      out.require(is_isomorphic(back, g), "round trip of " + canonical_form(g));
    }
    if (out.ok) out.note = std::to_string(cases.size()) + " golden cases";
  });

  return failures == 0 ? 0 : 1;
}
