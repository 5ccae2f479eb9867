#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indsub/certificate.hpp"
#include "indsub/graph.hpp"

namespace indsub {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Identifier written into generated files. Doubles take the top 53 bits of
/// one mt19937_64 draw; bounded integers use rejection sampling.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64-u53";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();                         // [0, 1)
  std::uint64_t below(std::uint64_t bound); // [0, bound), bound > 0
  bool bernoulli(double p) { return uniform() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

Graph gnp(std::size_t n, double p, std::uint64_t seed);

struct ChordalGraph {
  Graph graph;
  /// Perfect elimination ordering: each vertex's neighbours later in the
  /// order form a clique.
  std::vector<Vertex> elimination_order;
};

/// Each new vertex is joined to a random clique of the graph built so far.
ChordalGraph chordal(std::size_t n, std::uint64_t seed);

bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order);

using PairLengths = std::map<std::pair<int, int>, std::size_t>;

/// Every pair (i, j), 0 <= i < j < t, mapped to `length`.
PairLengths uniform_lengths(int t, std::size_t length);

struct PlantedInstance {
  Graph graph;
  SubdivisionCertificate certificate;
};

/**
 * A subdivision of K_t with the given path lengths (edges per subdivided
 * edge, all >= 3), plus `noise_n` vertices. Each noise vertex is joined
 * with probability `noise_p` to every other vertex, certificate vertices
 * included. Vertex ids are shuffled. The certificate's max_len is the larger
 * of floor(log2(n)^2) and the longest planted length.
 */
PlantedInstance planted_subdivision(int t, const PairLengths& lengths, std::size_t noise_n,
                                    double noise_p, std::uint64_t seed);

/// "# ..." metadata lines for graph files.
std::vector<std::string> gnp_metadata(std::size_t n, double p, std::uint64_t seed);
std::vector<std::string> chordal_metadata(std::size_t n, std::uint64_t seed);
std::vector<std::string> planted_metadata(int t, const PairLengths& lengths,
                                          std::size_t noise_n, double noise_p,
                                          std::uint64_t seed);

}  // namespace indsub
