#include "indsub/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace indsub {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

// Evaluated in long double; the factors are exact for the integer powers
// that appear in practice, so integral results stay integral.
long double main_denominator(int k, int t, long double L, long double D) {
  const long double T = std::pow(static_cast<long double>(2 * t), 4);
  return std::pow(T, k - 1) * std::pow(L, 3 * (k - 1)) * D;
}

}  // namespace

double bound_main(std::size_t n, int k, int t, std::size_t d) {
  require(n >= 2, "bound_main: n must be at least 2");
  require(k >= 1, "bound_main: k must be at least 1");
  require(t >= 3, "bound_main: t must be at least 3");
  require(d >= 2, "bound_main: d must be at least 2");
  const long double L = std::log2(static_cast<long double>(n));
  const long double D = std::log2(static_cast<long double>(d));
  return static_cast<double>(static_cast<long double>(n) / main_denominator(k, t, L, D));
}

double bound_no_degree(std::size_t n, int k, int t) { return bound_main(n, k, t, n); }

double bound_clique_free(std::size_t n, int t) {
  require(t >= 3, "bound_clique_free: t must be at least 3");
  return bound_no_degree(n, t - 1, t);
}

double clique_free_constant(int t) {
  require(t >= 3, "clique_free_constant: t must be at least 3");
  return static_cast<double>(std::pow(static_cast<long double>(2 * t), -4 * (t - 2)));
}

std::size_t general_h_order(const Graph& h) { return h.order(); }

std::size_t ceil_size(double bound) {
  if (!(bound > 0)) return 0;
  return static_cast<std::size_t>(std::ceil(bound));
}

DerivedConstants DerivedConstants::make(std::size_t n, int k, int t, std::size_t d) {
  require(n >= 1, "constants: n must be at least 1");
  require(k >= 1, "constants: k must be at least 1");
  require(t >= 3, "constants: t must be at least 3");
  DerivedConstants c;
  c.n = n;
  c.k = k;
  c.t = t;
  c.d = std::clamp<std::size_t>(d, 2, std::max<std::size_t>(n, 2));
  c.T = std::pow(2.0 * t, 4);
  c.L = std::log2(static_cast<double>(n));
  c.D = std::log2(static_cast<double>(c.d));
  return c;
}

std::size_t DerivedConstants::required_stable_size() const {
  if (n < 2) return n;
  return ceil_size(bound_main(n, k, t, d));
}

BoundModel BoundModel::faithful(int t) {
  require(t >= 3, "BoundModel: t must be at least 3");
  return BoundModel{std::pow(2.0 * t, 4), 3.0};
}

double BoundModel::denominator(int k, double L, double D) const {
  const long double levels = k - 1;
  return static_cast<double>(std::pow(static_cast<long double>(star_constant), levels) *
                             std::pow(static_cast<long double>(L), log_exponent * levels) *
                             D);
}

double BoundModel::bound(std::size_t n, int k, std::size_t d) const {
  require(n >= 2 && d >= 2, "BoundModel::bound: needs n >= 2 and d >= 2");
  const double L = std::log2(static_cast<double>(n));
  const double D = std::log2(static_cast<double>(d));
  return static_cast<double>(n) / denominator(k, L, D);
}

double BoundModel::leaf_target(std::size_t d, int k) const {
  require(d >= 2 && k >= 2, "BoundModel::leaf_target: needs d >= 2 and k >= 2");
  const double D = std::log2(static_cast<double>(d));
  const double levels = k - 2;
  return static_cast<double>(d) /
         (2.0 * std::pow(star_constant, levels) * std::pow(D, log_exponent * levels + 1));
}

}  // namespace indsub
