#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "indsub/graph.hpp"

namespace indsub {

/**
 * Centres a_1..a_p with leaf sets B_1..B_p. Valid when the centres are
 * distinct and pairwise nonadjacent, the leaf sets are pairwise disjoint,
 * stable and avoid the centres, and a_i is complete to B_i and anticomplete
 * to every other B_j.
 */
struct StarSystem {
  std::vector<Vertex> centers;
  std::vector<VertexSet> leaves;

  std::size_t length() const { return centers.size(); }
  /// min |B_i|, or `order` when the system is empty.
  std::size_t size(std::size_t order) const;
  VertexSet all_leaves(std::size_t universe) const;

  bool operator==(const StarSystem&) const = default;
};

/// Smallest x such that each vertex of a has at most x|b| neighbours in b
/// (0 when a or b is empty).
double sparsity(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Maximum over i < j of sparsity(B_j, B_i); 0 for length <= 1.
double semi_sparsity(const Graph& g, const StarSystem& sys);

/// Maximum over distinct i, j of sparsity(B_i, B_j); 0 for length <= 1.
double sparsity(const Graph& g, const StarSystem& sys);

/// Every violated star-system condition, in words. Empty means valid.
std::vector<std::string> star_system_violations(const Graph& g, const StarSystem& sys);

/**
 * Going from the last leaf set to the first, C_i keeps the vertices of B_i
 * with at most q|C_j| neighbours in every later C_j. When the input
 * semi-sparsity is at most q/(2p), every |C_i| > |B_i|/2 and the output
 * sparsity is at most q.
 */
StarSystem sparsify_star_system(const Graph& g, const StarSystem& sys, double q);

}  // namespace indsub
