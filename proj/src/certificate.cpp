#include "indsub/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace indsub {

std::string_view to_string(Mode m) { return m == Mode::faithful ? "faithful" : "scaled"; }

std::string_view to_string(ClaimedMode m) {
  switch (m) {
    case ClaimedMode::faithful: return "faithful";
    case ClaimedMode::scaled: return "scaled";
    case ClaimedMode::best_effort: return "best-effort";
  }
  return "faithful";
}

Mode parse_mode(std::string_view s) {
  if (s == "faithful") return Mode::faithful;
  if (s == "scaled") return Mode::scaled;
  throw CertificateError("unknown mode '" + std::string(s) + "'");
}

ClaimedMode parse_claimed_mode(std::string_view s) {
  if (s == "faithful") return ClaimedMode::faithful;
  if (s == "scaled") return ClaimedMode::scaled;
  if (s == "best-effort") return ClaimedMode::best_effort;
  throw CertificateError("unknown claimed mode '" + std::string(s) + "'");
}

std::size_t max_subdivision_length(std::size_t n) {
  if (n < 2) return 0;
  const double L = std::log2(static_cast<double>(n));
  return static_cast<std::size_t>(std::floor(L * L));
}

StableReport verify_stable(const Graph& g, const StableSetCertificate& c,
                           const DerivedConstants& constants) {
  VertexSet members(g.order());
  for (Vertex v : c.set) {
    if (v >= g.order())
      throw CertificateError("stable set vertex " + std::to_string(v) +
                             " outside the graph");
    if (members.contains(v))
      throw CertificateError("stable set repeats vertex " + std::to_string(v));
    members.insert(v);
  }
  StableReport r;
  r.size = c.set.size();
  r.is_stable = true;
  for (std::size_t a = 0; a < c.set.size() && r.is_stable; ++a)
    for (std::size_t b = a + 1; b < c.set.size(); ++b)
      if (g.adjacent(c.set[a], c.set[b])) {
        r.is_stable = false;
        break;
      }
  r.required = constants.required_stable_size();
  r.meets_faithful_bound = r.is_stable && r.size >= r.required;
  return r;
}

SubdivisionReport verify_subdivision(const Graph& g, const SubdivisionCertificate& c) {
  SubdivisionReport rep;
  auto bad = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };
  const auto t = c.t;

  if (t < 3) bad("order t=" + std::to_string(t) + " is below 3");
  if (c.branch.size() != static_cast<std::size_t>(std::max(t, 0)))
    bad("expected " + std::to_string(t) + " branch vertices, got " +
        std::to_string(c.branch.size()));
  if (c.min_len > c.max_len)
    bad("empty length window [" + std::to_string(c.min_len) + ", " +
        std::to_string(c.max_len) + "]");

  // Pair map shape.
  std::set<std::pair<int, int>> seen_pairs;
  std::vector<const PairPath*> usable;
  for (const auto& pp : c.paths) {
    const std::string name = "{" + std::to_string(pp.i) + "," + std::to_string(pp.j) + "}";
    if (pp.i < 0 || pp.j < 0 || pp.i >= t || pp.j >= t || pp.i >= pp.j ||
        static_cast<std::size_t>(pp.j) >= c.branch.size()) {
      bad("pair " + name + " is not a pair i<j of branch indices");
      continue;
    }
    if (!seen_pairs.emplace(pp.i, pp.j).second) {
      bad("pair " + name + " has more than one path");
      continue;
    }
    if (pp.path.vertices.empty()) {
      bad("pair " + name + " has an empty path");
      continue;
    }
    usable.push_back(&pp);
  }
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (!seen_pairs.count({i, j}))
        bad("pair {" + std::to_string(i) + "," + std::to_string(j) + "} has no path");

  // Id range.
  bool in_range = true;
  auto check_range = [&](Vertex v, const std::string& where) {
    if (v >= g.order()) {
      bad(where + " vertex " + std::to_string(v) + " is outside the graph");
      in_range = false;
    }
  };
  for (Vertex b : c.branch) check_range(b, "branch");
  for (const auto* pp : usable)
    for (Vertex v : pp->path.vertices) check_range(v, "path");
  if (!in_range) return rep;

  // Distinctness across the whole certificate.
  std::vector<Vertex> all(c.branch.begin(), c.branch.end());
  for (const auto* pp : usable)
    all.insert(all.end(), pp->path.vertices.begin(), pp->path.vertices.end());
  {
    std::vector<Vertex> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t a = 1; a < sorted.size(); ++a)
      if (sorted[a] == sorted[a - 1] && (a == 1 || sorted[a - 1] != sorted[a - 2]))
        bad("vertex " + std::to_string(sorted[a]) + " is used more than once");
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    all = std::move(sorted);
  }

  // Lengths and the expected edge set.
  std::set<std::pair<Vertex, Vertex>> expected;
  auto expect = [&](Vertex a, Vertex b) { expected.emplace(std::min(a, b), std::max(a, b)); };
  for (const auto* pp : usable) {
    const std::string name = "{" + std::to_string(pp->i) + "," + std::to_string(pp->j) + "}";
    const auto& vs = pp->path.vertices;
    const std::size_t total = pp->path.length() + 2;
    if (total < c.min_len || total > c.max_len)
      bad("pair " + name + " has length " + std::to_string(total) + " outside [" +
          std::to_string(c.min_len) + ", " + std::to_string(c.max_len) + "]");
    if (static_cast<std::size_t>(pp->j) < c.branch.size()) {
      expect(c.branch[pp->i], vs.front());
      expect(vs.back(), c.branch[pp->j]);
    }
    for (std::size_t a = 0; a + 1 < vs.size(); ++a) expect(vs[a], vs[a + 1]);
  }

  // Continuity: every expected edge is present.
  for (auto [a, b] : expected)
    if (a != b && !g.adjacent(a, b))
      bad("missing edge " + std::to_string(a) + "-" + std::to_string(b));

  // Inducedness: no other edge among certificate vertices.
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (g.adjacent(all[a], all[b]) && !expected.count({all[a], all[b]}))
        bad("extra edge " + std::to_string(all[a]) + "-" + std::to_string(all[b]) +
            " breaks inducedness");
  return rep;
}

}  // namespace indsub
