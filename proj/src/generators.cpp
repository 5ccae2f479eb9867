#include "indsub/generators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace indsub {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw GeneratorError("Rng::below: bound must be positive");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GeneratorError("gnp: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

ChordalGraph chordal(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw GeneratorError("chordal: n must be at least 1");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    if (rng.bernoulli(0.1)) continue;
    const auto u = static_cast<Vertex>(rng.below(v));
    std::vector<Vertex> clique{u};
    std::vector<Vertex> pool = adj[u];
    rng.shuffle(pool);
    for (Vertex w : pool) {
      if (!rng.bernoulli(0.5)) continue;
      const bool complete = std::all_of(clique.begin(), clique.end(), [&](Vertex c) {
        return std::find(adj[w].begin(), adj[w].end(), c) != adj[w].end();
      });
      if (complete) clique.push_back(w);
    }
    for (Vertex c : clique) {
      adj[c].push_back(v);
      adj[v].push_back(c);
      edges.emplace_back(c, v);
    }
  }
  ChordalGraph out{Graph::from_edges(n, edges), {}};
  out.elimination_order.resize(n);
  std::iota(out.elimination_order.rbegin(), out.elimination_order.rend(), Vertex{0});
  return out;
}

bool is_perfect_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  if (order.size() != g.order()) return false;
  std::vector<std::size_t> pos(g.order(), g.order());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= g.order() || pos[order[i]] != g.order()) return false;
    pos[order[i]] = i;
  }
  for (Vertex v : order) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbour_list(v))
      if (pos[w] > pos[v]) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return false;
  }
  return true;
}

PairLengths uniform_lengths(int t, std::size_t length) {
  PairLengths out;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) out[{i, j}] = length;
  return out;
}

PlantedInstance planted_subdivision(int t, const PairLengths& lengths, std::size_t noise_n,
                                    double noise_p, std::uint64_t seed) {
  if (t < 3) throw GeneratorError("planted_subdivision: t must be at least 3");
  if (!(noise_p >= 0.0 && noise_p <= 1.0))
    throw GeneratorError("planted_subdivision: noise_p must lie in [0, 1]");
  std::size_t longest = 0;
  std::size_t internal = 0;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      auto it = lengths.find({i, j});
      if (it == lengths.end())
        throw GeneratorError("planted_subdivision: no length for pair (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
      if (it->second < 3) throw GeneratorError("planted_subdivision: lengths must be >= 3");
      longest = std::max(longest, it->second);
      internal += it->second - 1;
    }
  if (lengths.size() != static_cast<std::size_t>(t * (t - 1) / 2))
    throw GeneratorError("planted_subdivision: lengths name a pair outside K_t");

  const std::size_t core = static_cast<std::size_t>(t) + internal;
  const std::size_t n = core + noise_n;
  Rng rng(seed);
  std::vector<Vertex> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Vertex{0});
  rng.shuffle(relabel);

  std::vector<Edge> edges;
  auto join = [&](Vertex a, Vertex b) {
    const Vertex x = relabel[a], y = relabel[b];
    edges.emplace_back(std::min(x, y), std::max(x, y));
  };

  SubdivisionCertificate cert;
  cert.t = t;
  for (int i = 0; i < t; ++i) cert.branch.push_back(relabel[static_cast<Vertex>(i)]);
  auto next = static_cast<Vertex>(t);
  for (const auto& [pair, len] : lengths) {
    PairPath pp{pair.first, pair.second, {}};
    Vertex prev = static_cast<Vertex>(pair.first);
    for (std::size_t s = 0; s + 1 < len; ++s) {
      join(prev, next);
      pp.path.vertices.push_back(relabel[next]);
      prev = next++;
    }
    join(prev, static_cast<Vertex>(pair.second));
    cert.paths.push_back(std::move(pp));
  }
  for (auto v = static_cast<Vertex>(core); v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (rng.bernoulli(noise_p)) join(u, v);

  std::sort(edges.begin(), edges.end());
  cert.min_len = 3;
  cert.max_len = std::max(max_subdivision_length(n), longest);
  return {Graph::from_edges(n, edges), std::move(cert)};
}

namespace {

std::string header(std::string_view name, std::uint64_t seed) {
  std::ostringstream s;
  s << "generator=" << name << " algo=" << kRngAlgorithm << " seed=" << seed;
  return s.str();
}

}  // namespace

std::vector<std::string> gnp_metadata(std::size_t n, double p, std::uint64_t seed) {
  std::ostringstream s;
  s << header("gnp", seed) << " n=" << n << " p=" << p;
  return {s.str()};
}

std::vector<std::string> chordal_metadata(std::size_t n, std::uint64_t seed) {
  std::ostringstream s;
  s << header("chordal", seed) << " n=" << n;
  return {s.str()};
}

std::vector<std::string> planted_metadata(int t, const PairLengths& lengths,
                                          std::size_t noise_n, double noise_p,
                                          std::uint64_t seed) {
  std::ostringstream s;
  s << header("planted", seed) << " t=" << t << " noise_n=" << noise_n
    << " noise_p=" << noise_p << " lengths=";
  bool first = true;
  for (const auto& [pair, len] : lengths) {
    s << (first ? "" : ",") << pair.first << '-' << pair.second << ':' << len;
    first = false;
  }
  return {s.str()};
}

}  // namespace indsub
