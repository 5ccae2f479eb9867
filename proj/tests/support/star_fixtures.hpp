#pragma once

#include <random>

#include "brute.hpp"
#include "indsub/star_system.hpp"

namespace fixtures {

using namespace indsub;

struct RandomStar {
  Graph g;
  StarSystem sys;
};

/// Centres 0..p-1, leaf set i of `leaf_size` vertices joined to centre i,
/// random edges between different leaf sets, and `extra` vertices joined
/// at random to leaves and to each other. The first `hubs` leaves of each
/// B_i are joined to most of every later B_j, which keeps semi-sparsity low
/// while giving sparsification something to remove.
inline RandomStar random_star_system(std::mt19937& rng, std::size_t p, std::size_t leaf_size,
                                     double cross, std::size_t extra, std::size_t hubs = 0) {
  const std::size_t n = p + p * leaf_size + extra;
  auto leaf = [&](std::size_t i, std::size_t s) {
    return static_cast<Vertex>(p + i * leaf_size + s);
  };
  std::bernoulli_distribution coin(cross);
  std::bernoulli_distribution dense(0.8);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t s = 0; s < leaf_size; ++s)
      edges.emplace_back(static_cast<Vertex>(i), leaf(i, s));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      for (std::size_t a = 0; a < leaf_size; ++a)
        for (std::size_t b = 0; b < leaf_size; ++b)
          if (a < hubs ? dense(rng) : coin(rng)) edges.emplace_back(leaf(i, a), leaf(j, b));
  const auto first_extra = static_cast<Vertex>(p + p * leaf_size);
  for (Vertex x = first_extra; x < n; ++x)
    for (Vertex v = static_cast<Vertex>(p); v < x; ++v)
      if (coin(rng)) edges.emplace_back(v, x);
  RandomStar out{brute::make(n, edges), {}};
  for (std::size_t i = 0; i < p; ++i) {
    out.sys.centers.push_back(static_cast<Vertex>(i));
    VertexSet b(n);
    for (std::size_t s = 0; s < leaf_size; ++s) b.insert(leaf(i, s));
    out.sys.leaves.push_back(b);
  }
  return out;
}

}  // namespace fixtures
