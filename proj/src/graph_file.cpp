#include "flowalg/graph_file.hpp"

#include <charconv>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace flowalg {

namespace {

std::uint32_t parse_id(const std::string& token, std::size_t line) {
  std::uint32_t value = 0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw InputError("line " + std::to_string(line) + ": '" + token + "' is not an unsigned integer id");
  return value;
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  std::vector<VertexId> vertices;
  std::set<VertexId> declared;
  std::vector<Edge> edges;
  std::map<EdgeId, std::size_t> edge_line;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line) + ": ";
    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw InputError(where + "expected 'vertex <id>'");
      const VertexId v = parse_id(tok[1], line);
      if (!declared.insert(v).second) throw InputError(where + "duplicate vertex id " + tok[1]);
      vertices.push_back(v);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw InputError(where + "expected 'edge <id> <tail> <head>'");
      const Edge e{parse_id(tok[1], line), parse_id(tok[2], line), parse_id(tok[3], line)};
      if (!edge_line.emplace(e.id, line).second)
        throw InputError(where + "duplicate edge id " + tok[1] + " (first on line " +
                         std::to_string(edge_line[e.id]) + ")");
      edges.push_back(e);
    } else {
      throw InputError(where + "unknown keyword '" + tok[0] + "'");
    }
  }
  for (const Edge& e : edges)
    for (VertexId v : {e.tail, e.head})
      if (!declared.count(v))
        throw InputError("line " + std::to_string(edge_line[e.id]) + ": edge " + std::to_string(e.id) +
                         " mentions undeclared vertex " + std::to_string(v));
  return Graph(std::move(vertices), std::move(edges));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph parse_graph(const std::string& path) {
  try {
    return parse_graph_text(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  for (VertexId v : g.vertices()) os << "vertex " << v << "\n";
  for (const Edge& e : g.edges()) os << "edge " << e.id << " " << e.tail << " " << e.head << "\n";
  return os.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace flowalg
