#include "indsub/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace indsub {
namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
  throw GraphError("line " + std::to_string(lineno) + ": " + what);
}

// Reads exactly two non-negative integers from the line.
std::pair<unsigned long long, unsigned long long> two_ints(const std::string& line,
                                                           std::size_t lineno) {
  std::istringstream ss(line);
  long long a = -1, b = -1;
  if (!(ss >> a >> b)) fail(lineno, "expected two integers");
  std::string rest;
  if (ss >> rest) fail(lineno, "trailing data '" + rest + "'");
  if (a < 0 || b < 0) fail(lineno, "negative value");
  return {static_cast<unsigned long long>(a), static_cast<unsigned long long>(b)};
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(in, line, lineno)) throw GraphError("empty graph file");
  const auto [n, m] = two_ints(line, lineno);
  if (n > (1ULL << 31)) fail(lineno, "vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (unsigned long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno))
      throw GraphError("expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    const auto [u, v] = two_ints(line, lineno);
    if (u >= n || v >= n) fail(lineno, "vertex id out of range");
    if (u == v) fail(lineno, "self-loop");
    if (u > v) fail(lineno, "edge endpoints must satisfy u < v");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line, lineno)) fail(lineno, "more edges than declared");
  try {
    return Graph::from_edges(n, edges);
  } catch (const GraphError& e) {
    throw GraphError(std::string("invalid graph: ") + e.what());
  }
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file " + path.string());
  try {
    return read_graph(in);
  } catch (const GraphError& e) {
    throw GraphError(path.string() + ": " + e.what());
  }
}

void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& comments) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Graph& g,
                      const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write graph file " + path.string());
  write_graph(out, g, comments);
}

}  // namespace indsub
