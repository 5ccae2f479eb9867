#include "doctest.h"

#include <random>

#include "brute.hpp"
#include "indsub/extractor.hpp"
#include "indsub/generators.hpp"
#include "indsub/oracle.hpp"

using namespace indsub;

namespace {

Params scaled(int t = 3, int k = 2, bool forced = false) {
  Params p;
  p.t = t;
  p.k = k;
  p.mode = Mode::scaled;
  p.force_pipeline = forced;
  return p;
}

Params faithful(int t = 3, int k = 2) {
  Params p;
  p.t = t;
  p.k = k;
  return p;
}

std::vector<Vertex> stable_of(const Outcome& o) {
  return std::get<StableSetCertificate>(o.result).set;
}

template <typename T>
const T& value(const Extractor::Step<T>& s) {
  REQUIRE(std::holds_alternative<T>(s));
  return std::get<T>(s);
}

const VertexSet& verdict_set(const Extractor::Verdict& v) {
  REQUIRE(std::holds_alternative<Extractor::Stable>(v));
  return std::get<Extractor::Stable>(v).set;
}

Graph with_isolated(const Graph& g, std::size_t extra) {
  return Graph::from_edges(g.order() + extra, g.edges());
}

}  // namespace

TEST_SUITE("extractor") {

TEST_CASE("params validation") {
  Params p = faithful();
  p.force_pipeline = true;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = scaled();
  p.star_constant = 0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = scaled();
  p.density_margin = 1.5;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = faithful(2);
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = faithful(3, 0);
  CHECK_THROWS_AS(p.validate(), DomainError);
  CHECK(faithful().bound_model().star_constant == doctest::Approx(1296.0));
  CHECK(faithful().bound_model().log_exponent == doctest::Approx(3.0));
}

TEST_CASE("greedy_stable") {
  CHECK(greedy_stable(brute::path_graph(5)).to_vector() == std::vector<Vertex>{0, 2, 4});
  CHECK(greedy_stable(brute::complete_graph(4)).size() == 1);
  CHECK(greedy_stable(Graph(5)).size() == 5);
  std::mt19937 rng(4);
  for (int round = 0; round < 100; ++round) {
    const Graph g = brute::random_graph(5 + rng() % 40, 0.2, rng);
    const VertexSet s = greedy_stable(g);
    CHECK(is_stable(g, s));
    const std::size_t delta = max_degree(g, g.all()).degree;
    CHECK(s.size() * (delta + 1) >= g.order());
  }
}

TEST_CASE("extract base cases") {
  Outcome o = extract(Graph(7), faithful(3, 1));
  CHECK(o.kind() == Outcome::Kind::stable);
  CHECK(stable_of(o) == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});

  const Graph m = brute::perfect_matching(5);
  o = extract(m, faithful());
  CHECK(stable_of(o).size() >= 5);
  CHECK(outcome_verifies(m, faithful(), o));

  o = extract(Graph(1), faithful());
  CHECK(stable_of(o).size() == 1);
  o = extract(brute::path_graph(3), scaled(3, 2, true));
  CHECK(o.kind() == Outcome::Kind::stable);
  CHECK(o.trace.front().branch == "degenerate-size");
}

TEST_CASE("faithful runs meet the bound and the greedy floor") {
  std::mt19937 rng(8);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + rng() % 120;
    const Graph g = brute::random_graph(n, 0.05 + 0.4 * (rng() % 10) / 10.0, rng);
    // k >= 2: with k = 1 the bound is n / log2(d), which only holds for edgeless graphs
    const Params p = faithful(3 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 2));
    const Outcome o = extract(g, p);
    REQUIRE(o.kind() == Outcome::Kind::stable);
    CHECK(outcome_verifies(g, p, o));
    const std::size_t delta = max_degree(g, g.all()).degree;
    CHECK(stable_of(o).size() * (delta + 1) >= n);
    CHECK(stable_of(o).size() >= ceil_size(bound_main(n, p.k, p.t, std::max<std::size_t>(delta, 2))));
  }
}

TEST_CASE("neighborhood_branch") {
  const Graph g = brute::star_graph(9, 5);
  Extractor ex(g, scaled());
  auto hit = ex.neighborhood_branch(g.all(), 0, 2, 9, 0);
  REQUIRE(hit);
  CHECK(verdict_set(*hit).to_vector() == std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(!ex.neighborhood_branch(g.all(), 0, 2, 10, 0));
  CHECK(ex.trace().back().branch == "pass");
}

TEST_CASE("removal_branch") {
  const Graph star = brute::star_graph(8, 8);
  Extractor ex(star, scaled());
  auto r = ex.removal_branch(star.all(), VertexSet(17, {0}), 2, 8, 100, 0);
  REQUIRE(std::holds_alternative<Extractor::Verdict>(r));
  CHECK(verdict_set(std::get<Extractor::Verdict>(r)).size() == 16);

  // two disjoint K_{1,8}: centres 0 and 9
  std::vector<Edge> e;
  for (Vertex v = 1; v <= 8; ++v) {
    e.emplace_back(0, v);
    e.emplace_back(9, 9 + v);
  }
  const Graph two = brute::make(18, e);
  Extractor ex2(two, scaled());
  CHECK(value(ex2.removal_branch(two.all(), VertexSet(18, {0}), 2, 8, 100, 0)) == 9);

  const Graph c6 = brute::cycle_graph(6);
  Extractor ex3(c6, scaled());
  CHECK(value(ex3.removal_branch(c6.all(), VertexSet(6), 2, 2, 100, 0)) == 0);
}

TEST_CASE("build_star_system") {
  const Graph c6 = brute::cycle_graph(6);
  Extractor ex(c6, scaled());
  const StarSystem empty = value(ex.build_star_system(c6.all(), 0, 0.75, 2, 2, 100, 0));
  CHECK(empty.length() == 0);
  CHECK(empty.size(6) == 6);

  const StarSystem s = value(ex.build_star_system(c6.all(), 2, 0.75, 2, 2, 100, 0));
  CHECK(s.centers == std::vector<Vertex>{0, 3});
  CHECK(s.leaves[0].to_vector() == std::vector<Vertex>{1, 5});
  CHECK(s.leaves[1].to_vector() == std::vector<Vertex>{2, 4});
  CHECK(star_system_violations(c6, s).empty());
  CHECK(semi_sparsity(c6, s) == doctest::Approx(0.5));
}

TEST_CASE("expand_or_merge") {
  const Graph star = brute::star_graph(5);
  Extractor ex(star, scaled());
  CHECK(value(ex.expand_or_merge(star.all(), VertexSet(6, {0}), 6.0, 2, 100, 0)) == 6);

  const Graph noisy = brute::star_graph(5, 10);
  Extractor ex2(noisy, scaled());
  auto r = ex2.expand_or_merge(noisy.all(), VertexSet(16, {0}), 7.0, 2, 100, 0);
  REQUIRE(std::holds_alternative<Extractor::Verdict>(r));
  const VertexSet& merged = verdict_set(std::get<Extractor::Verdict>(r));
  CHECK(merged.size() == 11);
  CHECK(is_stable(noisy, merged));
}

TEST_CASE("grow_layers on a path exhausts the radius cap") {
  const Graph p100 = brute::path_graph(100);
  Extractor ex(p100, scaled());
  const StarSystem sys{{99}, {VertexSet(100, {0})}};
  ObstructionContext ctx{VertexSet(100), VertexSet(100), VertexSet(100), VertexSet(100),
                         VertexSet::full(100)};
  auto r = ex.grow_layers(p100.all(), ctx, sys, 0, VertexSet(100), 1, 2, 1000, 0);
  REQUIRE(std::holds_alternative<Extractor::Verdict>(r));
  const auto& v = std::get<Extractor::Verdict>(r);
  REQUIRE(std::holds_alternative<Extractor::Failure>(v));
  CHECK(std::get<Extractor::Failure>(v).diagnostic.find("radius cap") != std::string::npos);
}

TEST_CASE("grow_layers records which steps meet 1 + 2/L") {
  const Graph p100 = brute::path_graph(100);
  Extractor ex(p100, scaled());
  const StarSystem sys{{99}, {VertexSet(100, {0})}};
  ObstructionContext ctx{VertexSet(100), VertexSet(100), VertexSet(100), VertexSet(100),
                         VertexSet::full(100)};
  // stops once the layer touches vertex 10
  auto st = value(ex.grow_layers(p100.all(), ctx, sys, 0, VertexSet(100, {10}), 1, 2, 1000, 0));
  CHECK(st.history == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const double L = std::log2(100.0);
  REQUIRE(st.accepted.size() + 1 == st.history.size());
  for (std::size_t r = 0; r < st.accepted.size(); ++r) {
    const bool grew = static_cast<double>(st.history[r + 1]) >=
                      (1.0 + 2.0 / L) * static_cast<double>(st.history[r]);
    CHECK(st.accepted[r] == grew);
  }
  CHECK(st.accepted[0]);
  CHECK(!st.accepted.back());
  CHECK(ex.layer_log().size() == 1);
}

TEST_CASE("faithful grow_layers asserts the first-step size") {
  const Graph p100 = brute::path_graph(100);
  Extractor ex(p100, faithful());
  const StarSystem sys{{99}, {VertexSet(100, {0})}};
  ObstructionContext ctx{VertexSet(100), VertexSet(100), VertexSet(100), VertexSet(100),
                         VertexSet::full(100)};
  CHECK_THROWS_AS(ex.grow_layers(p100.all(), ctx, sys, 0, VertexSet(100), 1, 2, 1000, 0),
                  FaithfulAssertion);
  try {
    (void)ex.grow_layers(p100.all(), ctx, sys, 0, VertexSet(100), 1, 2, 1000, 0);
  } catch (const FaithfulAssertion& e) {
    CHECK(std::string(e.what()).find("claim 7") != std::string::npos);
  }
}

TEST_CASE("faithful star construction asserts p/q <= 400T") {
  const Graph c6 = brute::cycle_graph(6);
  Extractor ex(c6, faithful());
  CHECK_THROWS_AS(ex.build_star_system(c6.all(), 3, 1e-9, 2, 2, 100, 0), FaithfulAssertion);
}

TEST_CASE("route_path") {
  // centres 0, 1; leaves 2 and 3 joined by an edge
  const Graph g = brute::make(4, {{0, 2}, {1, 3}, {2, 3}});
  Extractor ex(g, scaled());
  const StarSystem sys{{0, 1}, {VertexSet(4, {2}), VertexSet(4, {3})}};
  const auto ctx = ex.make_context(g.all(), sys, VertexSet(4));
  const Path p = value(ex.route_path(g.all(), ctx, sys, 0, 1, 0));
  CHECK(p.vertices == std::vector<Vertex>{2, 3});
  CHECK(p.length() + 2 == 3);

  // u=0, a=1, w=2, b=3, c=4, centres x=5 (at u) and y=6 (at w); a is in X3
  const Graph h = brute::make(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 2}, {5, 0}, {6, 2}});
  Extractor eh(h, scaled());
  const StarSystem hs{{5, 6}, {VertexSet(7, {0}), VertexSet(7, {2})}};
  auto hctx = eh.make_context(h.all(), hs, VertexSet(7));
  CHECK(hctx.allowed.to_vector() == std::vector<Vertex>{1, 3, 4});
  hctx.x3 = VertexSet(7, {1});
  hctx.allowed -= hctx.x3;
  const Path detour = value(eh.route_path(h.all(), hctx, hs, 0, 1, 0));
  CHECK(detour.vertices == std::vector<Vertex>{0, 3, 4, 2});
  CHECK(brute::induces_exactly_path(h, detour.vertices));
}

TEST_CASE("C_9 with isolated vertices in forced scaled mode") {
  const Graph g = with_isolated(brute::cycle_graph(9), 20);
  const Params p = scaled(3, 2, true);
  const Outcome o = extract(g, p);
  CHECK(outcome_verifies(g, p, o));
  if (const auto* c = std::get_if<SubdivisionCertificate>(&o.result))
    for (const auto& pp : c->paths) CHECK(pp.path.length() + 2 == 3);
  CHECK(oracle::exhaustive_subdivision_search(brute::cycle_graph(9), 3, 3, 9).has_value());
}

TEST_CASE("a planted K_4 subdivision is assembled by the pipeline") {
  const auto inst = planted_subdivision(4, uniform_lengths(4, 4), 0, 0.1, 0);
  const Params p = scaled(4, 3, true);
  Extractor ex(inst.graph, p);
  const Outcome o = ex.run();
  REQUIRE(o.kind() == Outcome::Kind::subdivision);
  const auto& c = std::get<SubdivisionCertificate>(o.result);
  CHECK(verify_subdivision(inst.graph, c).valid());

  // star systems logged after construction and after sparsification
  REQUIRE(ex.star_systems().size() >= 2);
  for (const auto& s : ex.star_systems()) CHECK(star_system_violations(inst.graph, s).empty());

  // Y after the first path is that path, meeting X1 only at its ends
  const auto& first = c.paths.front().path.vertices;
  std::size_t routes = 0;
  for (const auto& r : o.trace) {
    if (r.depth != 0) continue;
    if (r.claim == "9") ++routes;
    if (r.claim == "6" && routes == 1) {
      CHECK(r.set_size == first.size());
      break;
    }
  }
  VertexSet x1(inst.graph.order());
  for (Vertex a : c.branch) x1 |= inst.graph.neighbours(a);
  std::size_t in_x1 = 0;
  for (Vertex v : first) in_x1 += x1.contains(v);
  CHECK(in_x1 == 2);
}

TEST_CASE("a subdivision found in a recursive call is valid for the whole graph") {
  const Graph g = gnp(150, 0.02, 0);
  const Params p = scaled(3, 2, true);
  const Outcome o = extract(g, p);
  REQUIRE(o.kind() == Outcome::Kind::subdivision);
  std::size_t depth = 0;
  for (const auto& r : o.trace)
    if (r.claim == "assemble") depth = r.depth;
  CHECK(depth > 0);
  CHECK(verify_subdivision(g, std::get<SubdivisionCertificate>(o.result)).valid());
  CHECK(std::get<SubdivisionCertificate>(o.result).max_len == max_subdivision_length(150));
}

TEST_CASE("regime failures carry a verified stable set") {
  std::mt19937 rng(2);
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 300 && failures < 3; ++seed) {
    PairLengths lengths = uniform_lengths(3, 3);
    for (auto& [pair, len] : lengths) len = 3 + rng() % 4;
    const auto pl = planted_subdivision(3, lengths, seed % 31, 0.05, seed);
    const Params q = scaled(3, 2, true);
    const Outcome o = extract(pl.graph, q);
    CHECK(outcome_verifies(pl.graph, q, o));
    if (o.kind() != Outcome::Kind::regime_failure) continue;
    ++failures;
    const auto& f = std::get<RegimeFailure>(o.result);
    CHECK(!f.diagnostic.empty());
    CHECK(f.best.claimed_mode == ClaimedMode::best_effort);
    CHECK(is_stable(pl.graph, VertexSet::from_range(pl.graph.order(), f.best.set)));
    const auto doc = to_document(pl.graph, q, o);
    CHECK(doc.regime_failure == f.diagnostic);
  }
  CHECK(failures > 0);
}

TEST_CASE("outcomes are deterministic") {
  const Graph g = gnp(300, 0.02, 5);
  const Params p = scaled(3, 2, true);
  const Outcome a = extract(g, p);
  const Outcome b = extract(g, p);
  CHECK(a.result == b.result);
  CHECK(a.trace == b.trace);
}

TEST_CASE("trace lines") {
  TraceRecord r{"9", "route", 4, 1, 20, "pair=0,1 length=3"};
  CHECK(format_trace_line(r) == "claim=9 branch=route |set|=4 depth=1 n=20 pair=0,1 length=3");
}

TEST_CASE("scaled soundness on small random graphs") {
  std::mt19937 rng(21);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 4 + rng() % 60;
    const Graph g = brute::random_graph(n, 0.03 + 0.3 * (rng() % 10) / 10.0, rng);
    const Params p = scaled(3 + static_cast<int>(rng() % 2), 2, rng() % 2 == 0);
    const Outcome o = extract(g, p);
    CHECK(outcome_verifies(g, p, o));
  }
}

}  // TEST_SUITE
