#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indsub/vertex_set.hpp"

namespace indsub {

using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Each vertex keeps both a bitset row (constant-time adjacency, fast
 * degree-within-subset counts) and a sorted neighbour list. Memory is
 * n^2/8 bytes for the rows, which is fine up to a few tens of thousands of
 * vertices.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws GraphError on self-loops, duplicate edges or ids >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const VertexSet& neighbours(Vertex v) const { return rows_[v]; }
  std::span<const Vertex> neighbour_list(Vertex v) const { return lists_[v]; }

  std::size_t degree(Vertex v) const { return lists_[v].size(); }
  std::size_t degree_within(Vertex v, const VertexSet& within) const {
    return rows_[v].intersection_size(within);
  }

  VertexSet all() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<VertexSet> rows_;
  std::vector<std::vector<Vertex>> lists_;
  std::size_t edge_count_ = 0;
};

/// A sequence of distinct vertices; consecutive vertices are adjacent.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  bool operator==(const Path&) const = default;
};

std::size_t degree(const Graph& g, Vertex v);

/// s together with every vertex that has a neighbour in s.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// Vertices with a neighbour in s (s itself excluded unless reachable).
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

bool is_stable(const Graph& g, const VertexSet& s);

struct DegreeWitness {
  Vertex vertex;
  std::size_t degree;
};

/// Maximum degree of the subgraph induced on `within`, smallest id on ties.
/// Throws GraphError when `within` is empty.
DegreeWitness max_degree(const Graph& g, const VertexSet& within);

/**
 * layer[0] = sources; layer[r] = layer[r-1] plus every neighbour of
 * layer[r-1] that lies in `allowed`. Sources are members regardless of
 * `allowed`. Returns r_max + 1 layers.
 */
std::vector<VertexSet> bfs_layers(const Graph& g, const VertexSet& sources,
                                  const VertexSet& allowed, std::size_t r_max);

/**
 * Shortest path with first vertex in `from`, last vertex in `to` and every
 * internal vertex in `allowed` minus (from | to). Among shortest paths the
 * lexicographically smallest vertex sequence is returned. A shortest such
 * path is induced in the subgraph on from | to | allowed.
 *
 * Throws GraphError when `from` and `to` intersect.
 */
std::optional<Path> shortest_pair_path(const Graph& g, const VertexSet& from,
                                       const VertexSet& to,
                                       const VertexSet& allowed);

/// True when the path is a valid path of g whose vertex set induces
/// exactly the path edges.
bool is_induced_path(const Graph& g, const Path& p);

}  // namespace indsub
