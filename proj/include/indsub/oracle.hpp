#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "indsub/certificate.hpp"
#include "indsub/graph.hpp"

// Exact solvers for small instances. Nothing in here shares code with the
// extractor; they exist to check it.
namespace indsub::oracle {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A maximum stable set, by branch and bound (maximum clique of the
/// complement with greedy-colouring bounds). Throws OracleError when more
/// than `node_budget` search nodes are needed.
VertexSet exact_max_stable(const Graph& g, std::size_t node_budget = 50'000'000);

/// An induced cycle (as a cyclic vertex sequence) whose length lies in
/// [lo, hi], found by extending induced paths from each smallest vertex.
/// Requires 3 <= lo <= hi and n <= size_limit.
std::optional<std::vector<Vertex>> induced_cycle_in_range(const Graph& g, std::size_t lo,
                                                          std::size_t hi,
                                                          std::size_t size_limit = 40);

/// An induced subdivision of K_t with every subdivided edge of length in
/// [lo, hi], by exhaustive search over branch sets and path systems.
/// Requires t >= 3, 3 <= lo <= hi and n <= size_limit.
std::optional<SubdivisionCertificate> exhaustive_subdivision_search(
    const Graph& g, int t, std::size_t lo, std::size_t hi, std::size_t size_limit = 15);

}  // namespace indsub::oracle
