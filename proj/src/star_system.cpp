#include "indsub/star_system.hpp"

#include <algorithm>

namespace indsub {

std::size_t StarSystem::size(std::size_t order) const {
  if (leaves.empty()) return order;
  std::size_t m = leaves.front().size();
  for (const auto& b : leaves) m = std::min(m, b.size());
  return m;
}

VertexSet StarSystem::all_leaves(std::size_t universe) const {
  VertexSet u(universe);
  for (const auto& b : leaves) u |= b;
  return u;
}

double sparsity(const Graph& g, const VertexSet& a, const VertexSet& b) {
  const std::size_t nb = b.size();
  if (nb == 0) return 0.0;
  std::size_t worst = 0;
  a.for_each([&](Vertex v) { worst = std::max(worst, g.degree_within(v, b)); });
  return static_cast<double>(worst) / static_cast<double>(nb);
}

double semi_sparsity(const Graph& g, const StarSystem& sys) {
  double s = 0.0;
  for (std::size_t i = 0; i < sys.length(); ++i)
    for (std::size_t j = i + 1; j < sys.length(); ++j)
      s = std::max(s, sparsity(g, sys.leaves[j], sys.leaves[i]));
  return s;
}

double sparsity(const Graph& g, const StarSystem& sys) {
  double s = 0.0;
  for (std::size_t i = 0; i < sys.length(); ++i)
    for (std::size_t j = 0; j < sys.length(); ++j)
      if (i != j) s = std::max(s, sparsity(g, sys.leaves[i], sys.leaves[j]));
  return s;
}

std::vector<std::string> star_system_violations(const Graph& g, const StarSystem& sys) {
  std::vector<std::string> out;
  const std::size_t p = sys.length();
  if (sys.leaves.size() != p) {
    out.push_back("centre and leaf sequences differ in length");
    return out;
  }
  VertexSet centres(g.order());
  for (std::size_t i = 0; i < p; ++i) {
    const Vertex a = sys.centers[i];
    if (a >= g.order()) {
      out.push_back("centre " + std::to_string(a) + " outside the graph");
      return out;
    }
    if (centres.contains(a)) out.push_back("centre " + std::to_string(a) + " repeated");
    centres.insert(a);
  }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (g.adjacent(sys.centers[i], sys.centers[j]))
        out.push_back("centres " + std::to_string(sys.centers[i]) + " and " +
                      std::to_string(sys.centers[j]) + " are adjacent");
  for (std::size_t i = 0; i < p; ++i) {
    const auto& b = sys.leaves[i];
    const std::string name = "B_" + std::to_string(i);
    if (b.universe() != g.order()) {
      out.push_back(name + " has the wrong universe");
      continue;
    }
    if (!is_stable(g, b)) out.push_back(name + " is not stable");
    if (b.intersects(centres)) out.push_back(name + " contains a centre");
    for (std::size_t j = i + 1; j < p; ++j)
      if (b.intersects(sys.leaves[j]))
        out.push_back(name + " meets B_" + std::to_string(j));
    for (std::size_t j = 0; j < p; ++j) {
      const auto& row = g.neighbours(sys.centers[j]);
      if (j == i) {
        if (!b.is_subset_of(row))
          out.push_back("centre " + std::to_string(sys.centers[j]) +
                        " is not complete to " + name);
      } else if (row.intersects(b)) {
        out.push_back("centre " + std::to_string(sys.centers[j]) + " has a neighbour in " +
                      name);
      }
    }
  }
  return out;
}

StarSystem sparsify_star_system(const Graph& g, const StarSystem& sys, double q) {
  const std::size_t p = sys.length();
  if (p <= 1) return sys;
  StarSystem out = sys;
  const double limit_factor = q;  // 2p * q' with q' = q / (2p)
  for (std::size_t i = p - 1; i-- > 0;) {
    VertexSet kept(g.order());
    sys.leaves[i].for_each([&](Vertex v) {
      for (std::size_t j = i + 1; j < p; ++j) {
        const double limit = limit_factor * static_cast<double>(out.leaves[j].size());
        if (static_cast<double>(g.degree_within(v, out.leaves[j])) > limit) return;
      }
      kept.insert(v);
    });
    out.leaves[i] = std::move(kept);
  }
  return out;
}

}  // namespace indsub
