#include "fatcob/fg_format.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fatcob/error.hpp"

namespace fatcob {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

}  // namespace

OpenClosedFatGraph parse_fg(const std::string& text) {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::map<std::string, std::vector<std::string>> orders;
  std::vector<std::string> in, out, closed;
  std::set<std::string> seen_lists;
  bool header = false;

  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];
    if (!header) {
      if (head.text != "fatgraph" || tokens.size() != 1)
        throw ParseFailure(line_no, head.column, "missing fatgraph header");
      header = true;
      continue;
    }
    auto arity_error = [&](const std::string& what) { throw ParseFailure(line_no, head.column, what); };
    if (head.text == "vertex") {
      if (tokens.size() == 2) {
        vertices.push_back({tokens[1].text, false});
      } else if (tokens.size() == 3 && tokens[2].text == "isolated") {
        vertices.push_back({tokens[1].text, true});
      } else if (tokens.size() == 3) {
        throw ParseFailure(line_no, tokens[2].column, "expected 'isolated', got '" + tokens[2].text + "'");
      } else {
        arity_error("vertex takes a name and an optional 'isolated' flag");
      }
    } else if (head.text == "edge") {
      if (tokens.size() != 4) arity_error("edge takes a name, a source and a target");
      if (tokens[1].text.find('.') != std::string::npos)
        throw ParseFailure(line_no, tokens[1].column, "edge names may not contain '.'");
      edges.push_back({tokens[1].text, tokens[2].text, tokens[3].text});
    } else if (head.text == "order") {
      if (tokens.size() < 2) arity_error("order takes a vertex and its half-edges");
      if (orders.count(tokens[1].text))
        throw ParseFailure(line_no, tokens[1].column, "second order line for vertex '" + tokens[1].text + "'");
      auto& o = orders[tokens[1].text];
      for (std::size_t k = 2; k < tokens.size(); ++k) o.push_back(tokens[k].text);
    } else if (head.text == "in" || head.text == "out" || head.text == "closed") {
      if (!seen_lists.insert(head.text).second) arity_error("second '" + head.text + "' line");
      auto& list = head.text == "in" ? in : head.text == "out" ? out : closed;
      for (std::size_t k = 1; k < tokens.size(); ++k) list.push_back(tokens[k].text);
    } else {
      throw ParseFailure(line_no, head.column, "unknown directive '" + head.text + "'");
    }
  }
  if (!header) throw ParseFailure(line_no == 0 ? 1 : line_no, 1, "missing fatgraph header");
  return decorate(FatGraph::create(vertices, edges, orders), in, out, closed);
}

OpenClosedFatGraph load_fg(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_fg(buffer.str());
}

std::string serialize_fg(const OpenClosedFatGraph& oc) {
  const FatGraph& g = oc.base();
  std::ostringstream out;
  out << "fatgraph\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out << "vertex " << g.vertex_name(v) << (g.is_isolated(v) ? " isolated" : "") << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << "edge " << g.edge_name(e) << ' ' << g.vertex_name(g.source(2 * e)) << ' '
        << g.vertex_name(g.source(2 * e + 1)) << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_isolated(v)) continue;
    out << "order " << g.vertex_name(v);
    for (HalfEdgeId h : g.rotation(v)) out << ' ' << g.half_edge_name(h);
    out << '\n';
  }
  auto list = [&](const char* key, const std::vector<VertexId>& vs) {
    if (vs.empty()) return;
    out << key;
    for (VertexId v : vs) out << ' ' << g.vertex_name(v);
    out << '\n';
  };
  list("in", oc.in_leaves());
  list("out", oc.out_leaves());
  list("closed", oc.closed_leaves());
  return out.str();
}

}  // namespace fatcob
