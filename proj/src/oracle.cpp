#include "indsub/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace indsub::oracle {
namespace {

// Maximum clique of the complement, vertices renumbered by descending
// complement degree. Colour classes give the upper bound (MCQ style).
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::size_t budget) : budget_(budget) {
    const std::size_t n = g.order();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) < g.degree(b);  // high complement degree first
    });
    rows_.assign(n, VertexSet(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && !g.adjacent(order_[a], order_[b])) rows_[a].insert(static_cast<Vertex>(b));
    best_ = VertexSet(n);
    current_ = VertexSet(n);
  }

  VertexSet run() {
    const std::size_t n = rows_.size();
    expand(VertexSet::full(n), 0);
    VertexSet out(n);
    best_.for_each([&](Vertex v) { out.insert(order_[v]); });
    return out;
  }

 private:
  void expand(VertexSet candidates, std::size_t depth) {
    if (++nodes_ > budget_)
      throw OracleError("exact_max_stable: node budget of " + std::to_string(budget_) +
                        " exhausted");
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    colour_sort(candidates, order, colour);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (depth + colour[idx] <= best_size_) return;
      const Vertex v = order[idx];
      current_.insert(v);
      VertexSet next = candidates & rows_[v];
      if (next.empty()) {
        if (depth + 1 > best_size_) {
          best_ = current_;
          best_size_ = depth + 1;
        }
      } else {
        expand(std::move(next), depth + 1);
      }
      current_.erase(v);
      candidates.erase(v);
    }
  }

  void colour_sort(const VertexSet& candidates, std::vector<Vertex>& order,
                   std::vector<std::size_t>& colour) const {
    VertexSet uncoloured = candidates;
    std::size_t c = 0;
    while (!uncoloured.empty()) {
      ++c;
      VertexSet open = uncoloured;
      while (auto v = open.first()) {
        open.erase(*v);
        open -= rows_[*v];
        uncoloured.erase(*v);
        order.push_back(*v);
        colour.push_back(c);
      }
    }
  }

  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<VertexSet> rows_;
  VertexSet best_;
  VertexSet current_;
  std::size_t best_size_ = 0;
};

class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t lo, std::size_t hi) : g_(g), lo_(lo), hi_(hi) {}

  std::optional<std::vector<Vertex>> run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      path_.assign(1, s);
      on_path_ = VertexSet(g_.order());
      on_path_.insert(s);
      if (extend(VertexSet(g_.order()))) return path_;
    }
    return std::nullopt;
  }

 private:
  // `blocked` holds the neighbours of every path vertex except the first
  // and the last; a new vertex there would create a chord.
  bool extend(const VertexSet& blocked) {
    const Vertex s = path_.front();
    const Vertex last = path_.back();
    for (Vertex w : g_.neighbour_list(last)) {
      if (w <= s || on_path_.contains(w) || blocked.contains(w)) continue;
      const bool closes = path_.size() >= 2 && g_.adjacent(w, s);
      if (closes) {
        const std::size_t len = path_.size() + 1;
        if (len >= lo_ && len <= hi_) {
          path_.push_back(w);
          return true;
        }
        continue;
      }
      if (path_.size() + 1 >= hi_) continue;  // a closing vertex would exceed hi
      VertexSet next_blocked = blocked;
      if (path_.size() >= 2) next_blocked |= g_.neighbours(last);
      path_.push_back(w);
      on_path_.insert(w);
      if (extend(next_blocked)) return true;
      on_path_.erase(w);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t lo_, hi_;
  std::vector<Vertex> path_;
  VertexSet on_path_;
};

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& g, int t, std::size_t lo, std::size_t hi)
      : g_(g), t_(t), lo_(lo), hi_(hi), used_(g.order()) {
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) pairs_.emplace_back(i, j);
  }

  std::optional<SubdivisionCertificate> run() {
    if (choose_branch(0)) {
      SubdivisionCertificate c;
      c.t = t_;
      c.branch = branch_;
      c.min_len = lo_;
      c.max_len = hi_;
      for (std::size_t p = 0; p < pairs_.size(); ++p)
        c.paths.push_back(PairPath{pairs_[p].first, pairs_[p].second, Path{paths_[p]}});
      return c;
    }
    return std::nullopt;
  }

 private:
  bool choose_branch(Vertex from) {
    if (branch_.size() == static_cast<std::size_t>(t_)) {
      paths_.assign(pairs_.size(), {});
      return route(0);
    }
    for (Vertex v = from; v < g_.order(); ++v) {
      if (g_.neighbours(v).intersects(used_)) continue;
      branch_.push_back(v);
      used_.insert(v);
      if (choose_branch(v + 1)) return true;
      used_.erase(v);
      branch_.pop_back();
    }
    return false;
  }

  bool route(std::size_t p) {
    if (p == pairs_.size()) return true;
    return walk(p, branch_[pairs_[p].first]);
  }

  // Extends the internal vertex list of path p from `cur`.
  bool walk(std::size_t p, Vertex cur) {
    const Vertex target = branch_[pairs_[p].second];
    auto& internal = paths_[p];
    for (Vertex w : g_.neighbour_list(cur)) {
      if (used_.contains(w)) continue;
      const VertexSet touch = g_.neighbours(w) & used_;
      const std::size_t hits = touch.size();
      const std::size_t len_if_closed = internal.size() + 2;
      if (hits == 2 && touch.contains(target) && cur != target) {
        if (len_if_closed < lo_ || len_if_closed > hi_) continue;
        internal.push_back(w);
        used_.insert(w);
        if (route(p + 1)) return true;
        used_.erase(w);
        internal.pop_back();
      } else if (hits == 1) {
        if (len_if_closed + 1 > hi_) continue;
        internal.push_back(w);
        used_.insert(w);
        if (walk(p, w)) return true;
        used_.erase(w);
        internal.pop_back();
      }
    }
    return false;
  }

  const Graph& g_;
  int t_;
  std::size_t lo_, hi_;
  VertexSet used_;
  std::vector<Vertex> branch_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<Vertex>> paths_;
};

}  // namespace

VertexSet exact_max_stable(const Graph& g, std::size_t node_budget) {
  if (g.order() == 0) return VertexSet(0);
  return CliqueSearch(g, node_budget).run();
}

std::optional<std::vector<Vertex>> induced_cycle_in_range(const Graph& g, std::size_t lo,
                                                          std::size_t hi,
                                                          std::size_t size_limit) {
  if (lo < 3 || lo > hi) throw OracleError("induced_cycle_in_range: need 3 <= lo <= hi");
  if (g.order() > size_limit)
    throw OracleError("induced_cycle_in_range: graph has " + std::to_string(g.order()) +
                      " vertices, limit is " + std::to_string(size_limit));
  return CycleSearch(g, lo, hi).run();
}

std::optional<SubdivisionCertificate> exhaustive_subdivision_search(const Graph& g, int t,
                                                                    std::size_t lo,
                                                                    std::size_t hi,
                                                                    std::size_t size_limit) {
  if (t < 3) throw OracleError("exhaustive_subdivision_search: t must be at least 3");
  if (lo < 3 || lo > hi)
    throw OracleError("exhaustive_subdivision_search: need 3 <= lo <= hi");
  if (g.order() > size_limit)
    throw OracleError("exhaustive_subdivision_search: graph has " +
                      std::to_string(g.order()) + " vertices, limit is " +
                      std::to_string(size_limit));
  return SubdivisionSearch(g, t, lo, hi).run();
}

}  // namespace indsub::oracle
