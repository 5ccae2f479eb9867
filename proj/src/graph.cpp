#include "indsub/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace indsub {

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)), lists_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (g.rows_[u].contains(v))
      throw GraphError("duplicate edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ")");
    g.rows_[u].insert(v);
    g.rows_[v].insert(u);
    ++g.edge_count_;
  }
  for (Vertex v = 0; v < n; ++v) g.lists_[v] = g.rows_[v].to_vector();
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : lists_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  s.for_each([&](Vertex v) { out |= g.neighbours(v); });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  return open_neighborhood(g, s) | s;
}

bool is_stable(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (ok && g.neighbours(v).intersects(s)) ok = false;
  });
  return ok;
}

DegreeWitness max_degree(const Graph& g, const VertexSet& within) {
  std::optional<DegreeWitness> best;
  within.for_each([&](Vertex v) {
    const std::size_t d = g.degree_within(v, within);
    if (!best || d > best->degree) best = DegreeWitness{v, d};
  });
  if (!best) throw GraphError("max_degree of an empty vertex set");
  return *best;
}

std::vector<VertexSet> bfs_layers(const Graph& g, const VertexSet& sources,
                                  const VertexSet& allowed, std::size_t r_max) {
  std::vector<VertexSet> layers;
  layers.reserve(r_max + 1);
  layers.push_back(sources);
  VertexSet frontier = sources;
  for (std::size_t r = 1; r <= r_max; ++r) {
    VertexSet fresh = open_neighborhood(g, frontier);
    fresh &= allowed;
    fresh -= layers.back();
    layers.push_back(layers.back() | fresh);
    frontier = std::move(fresh);
  }
  return layers;
}

std::optional<Path> shortest_pair_path(const Graph& g, const VertexSet& from,
                                       const VertexSet& to,
                                       const VertexSet& allowed) {
  if (from.intersects(to))
    throw GraphError("shortest_pair_path: endpoint sets are not disjoint");
  if (from.empty() || to.empty()) return std::nullopt;

  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.order();
  const VertexSet inner = allowed - from - to;

  // Distance from each vertex of `to` or `inner` to the set `to`, walking
  // only through `inner`.
  std::vector<std::size_t> dist(n, kUnreached);
  std::deque<Vertex> queue;
  to.for_each([&](Vertex v) {
    dist[v] = 0;
    queue.push_back(v);
  });
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbour_list(v)) {
      if (dist[w] != kUnreached || !inner.contains(w)) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }

  std::size_t best = kUnreached;
  std::optional<Vertex> start;
  from.for_each([&](Vertex s) {
    for (Vertex w : g.neighbour_list(s)) {
      if (dist[w] == kUnreached) continue;
      if (dist[w] + 1 < best) {
        best = dist[w] + 1;
        start = s;
      }
    }
  });
  if (!start) return std::nullopt;

  Path path;
  path.vertices.push_back(*start);
  std::size_t remaining = best;
  Vertex cur = *start;
  while (remaining > 0) {
    // Neighbour lists are sorted, so the first hit is the smallest id.
    for (Vertex w : g.neighbour_list(cur)) {
      if (dist[w] == remaining - 1) {
        cur = w;
        break;
      }
    }
    path.vertices.push_back(cur);
    --remaining;
  }
  return path;
}

bool is_induced_path(const Graph& g, const Path& p) {
  const auto& vs = p.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) return false;
      const bool expected = (j == i + 1);
      if (g.adjacent(vs[i], vs[j]) != expected) return false;
    }
  return true;
}

}  // namespace indsub
