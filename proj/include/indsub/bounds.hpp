#pragma once

#include <cstddef>
#include <stdexcept>

#include "indsub/graph.hpp"

namespace indsub {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n / ((2t)^(4(k-1)) * (log n)^(3(k-1)) * log d). Requires n >= 2, k >= 1,
/// t >= 3, d >= 2. Logs are base 2.
double bound_main(std::size_t n, int k, int t, std::size_t d);

/// bound_main with d replaced by n: n / ((2t)^(4(k-1)) (log n)^(3k-2)).
double bound_no_degree(std::size_t n, int k, int t);

/// Bound for K_t-subdivision-free graphs, which have clique number < t:
/// bound_no_degree(n, t-1, t).
double bound_clique_free(std::size_t n, int t);

/// c_t = (2t)^(-4(t-2)).
double clique_free_constant(int t);

/// Order of the complete graph whose subdivisions contain every subdivision
/// of h (with lengths at least two): |V(h)|.
std::size_t general_h_order(const Graph& h);

/// ceil(bound) as an integer size, never less than zero.
std::size_t ceil_size(double bound);

/// The quantities every step of the extraction reuses.
struct DerivedConstants {
  std::size_t n = 0;
  int k = 1;
  int t = 3;
  std::size_t d = 2;
  double T = 0;  // (2t)^4
  double L = 0;  // log2 n
  double D = 0;  // log2 d

  /// Requires n >= 1, k >= 1, t >= 3; d is clamped to [2, max(n, 2)].
  static DerivedConstants make(std::size_t n, int k, int t, std::size_t d);

  /// Smallest stable-set size that satisfies the main bound; for n = 1 this
  /// is 1 (the bound formula needs n >= 2).
  std::size_t required_stable_size() const;
};

/**
 * Parameterised family of the main bound. The faithful model uses the
 * constant (2t)^4 and log exponent 3 per clique level; scaled runs substitute
 * other positive values. denominator(k, L, D) = c^(k-1) * L^(e(k-1)) * D.
 */
struct BoundModel {
  double star_constant = 1296;
  double log_exponent = 3;

  static BoundModel faithful(int t);

  double denominator(int k, double L, double D) const;
  /// n / denominator(k, log n, log d).
  double bound(std::size_t n, int k, std::size_t d) const;
  /// Lower bound on the leaf sets the star construction can promise:
  /// d / (2 c^(k-2) D^(e(k-2)+1)).
  double leaf_target(std::size_t d, int k) const;
};

}  // namespace indsub
