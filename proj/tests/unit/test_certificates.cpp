#include "doctest.h"

#include <cmath>
#include <random>

#include "brute.hpp"
#include "indsub/bounds.hpp"
#include "indsub/certificate.hpp"
#include "indsub/certificate_json.hpp"
#include "indsub/generators.hpp"

using namespace indsub;

namespace {

SubdivisionCertificate c9_certificate() {
  SubdivisionCertificate c;
  c.t = 3;
  c.branch = {0, 3, 6};
  c.paths = {PairPath{0, 1, Path{{1, 2}}}, PairPath{1, 2, Path{{4, 5}}},
             PairPath{0, 2, Path{{8, 7}}}};
  c.min_len = 3;
  c.max_len = 9;
  return c;
}

bool has_violation(const SubdivisionReport& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_SUITE("certificates") {

TEST_CASE("bound_main examples") {
  CHECK(bound_main(4, 1, 3, 2) == doctest::Approx(4.0));
  CHECK(bound_main(65536, 2, 3, 256) == doctest::Approx(65536.0 / (1296.0 * 4096.0 * 8.0)));
  CHECK(bound_main(65536, 2, 3, 256) == doctest::Approx(0.001543).epsilon(1e-3));
  CHECK(bound_main(2, 2, 3, 2) == doctest::Approx(2.0 / 1296.0));
}

TEST_CASE("bound_main domain") {
  CHECK_THROWS_AS(bound_main(1, 1, 3, 2), DomainError);
  CHECK_THROWS_AS(bound_main(4, 0, 3, 2), DomainError);
  CHECK_THROWS_AS(bound_main(4, 1, 2, 2), DomainError);
  CHECK_THROWS_AS(bound_main(4, 1, 3, 1), DomainError);
}

TEST_CASE("bound_no_degree and bound_clique_free") {
  CHECK(bound_no_degree(4, 1, 3) == doctest::Approx(2.0));
  CHECK(bound_no_degree(1024, 2, 3) == doctest::Approx(1024.0 / (1296.0 * 1e4)));
  CHECK(clique_free_constant(3) == doctest::Approx(1.0 / 1296.0));
  CHECK(bound_clique_free(1024, 3) == doctest::Approx(1024.0 / (1296.0 * 1e4)));
  for (std::size_t n : {2u, 3u, 17u, 1000u, 65536u})
    for (int t : {3, 4, 5}) {
      for (int k : {1, 2, 3})
        CHECK(bound_no_degree(n, k, t) == doctest::Approx(bound_main(n, k, t, n)));
      CHECK(bound_clique_free(n, t) == doctest::Approx(bound_no_degree(n, t - 1, t)));
    }
}

TEST_CASE("bound_main monotonicity on sampled parameters") {
  // Increasing in n once log n exceeds the log exponent, i.e. ln n > 3(k-1).
  std::mt19937 rng(3);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = 1024 + rng() % 1'000'000;
    const int k = 1 + static_cast<int>(rng() % 3);
    const int t = 3 + static_cast<int>(rng() % 4);
    const std::size_t d = 2 + rng() % (n - 2);
    const double b = bound_main(n, k, t, d);
    CHECK(bound_main(n + 1 + rng() % 1000, k, t, d) > b);
    CHECK(bound_main(n, k + 1, t, d) <= b);
    CHECK(bound_main(n, k, t + 1, d) <= b);
    CHECK(bound_main(n, k, t, std::min(n, d + 1 + rng() % 100)) <= b);
  }
}

TEST_CASE("general_h_order") {
  CHECK(general_h_order(brute::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})) == 4);
  CHECK(general_h_order(Graph(1)) == 1);
  CHECK(general_h_order(brute::cycle_graph(5)) == 5);
}

TEST_CASE("derived constants") {
  const auto c = DerivedConstants::make(1024, 2, 3, 5000);
  CHECK(c.T == doctest::Approx(1296.0));
  CHECK(c.L == doctest::Approx(10.0));
  CHECK(c.d == 1024);
  CHECK(c.D <= c.L);
  CHECK(DerivedConstants::make(16, 2, 3, 0).d == 2);
  CHECK(DerivedConstants::make(1, 2, 3, 2).required_stable_size() == 1);
  CHECK(max_subdivision_length(9) == 10);
  CHECK(max_subdivision_length(2) == 1);
  CHECK(max_subdivision_length(65536) == 256);
}

TEST_CASE("verify_stable") {
  const auto k = DerivedConstants::make(6, 2, 3, 2);
  auto r = verify_stable(brute::cycle_graph(6), StableSetCertificate{{0, 2, 4}}, k);
  CHECK(r.is_stable);
  CHECK(r.size == 3);
  r = verify_stable(brute::complete_graph(3), StableSetCertificate{{0, 1}},
                    DerivedConstants::make(3, 2, 3, 2));
  CHECK(!r.is_stable);
  r = verify_stable(brute::path_graph(5), StableSetCertificate{{0, 2, 4}},
                    DerivedConstants::make(5, 2, 3, 2));
  CHECK(r.size == 3);
  CHECK(r.required == 1);
  CHECK(std::ceil(5.0 / (1296.0 * std::pow(std::log2(5.0), 3))) == 1.0);
  CHECK(r.meets_faithful_bound);
  CHECK_THROWS_AS(verify_stable(brute::path_graph(5), StableSetCertificate{{0, 7}},
                                DerivedConstants::make(5, 2, 3, 2)),
                  CertificateError);
  CHECK_THROWS_AS(verify_stable(brute::path_graph(5), StableSetCertificate{{0, 0}},
                                DerivedConstants::make(5, 2, 3, 2)),
                  CertificateError);
}

TEST_CASE("verify_subdivision on C_9") {
  const Graph c9 = brute::cycle_graph(9);
  CHECK(verify_subdivision(c9, c9_certificate()).valid());

  std::vector<Edge> chord_edges = c9.edges();
  chord_edges.emplace_back(1, 4);
  std::sort(chord_edges.begin(), chord_edges.end());
  const Graph chord = Graph::from_edges(9, chord_edges);
  CHECK(!verify_subdivision(chord, c9_certificate()).valid());

  auto short_max = c9_certificate();
  short_max.max_len = 2;
  const auto r = verify_subdivision(c9, short_max);
  CHECK(!r.valid());
  CHECK(has_violation(r, "length"));
}

TEST_CASE("verify_subdivision lists each kind of defect") {
  const Graph c9 = brute::cycle_graph(9);
  auto c = c9_certificate();
  c.paths.pop_back();
  CHECK(!verify_subdivision(c9, c).valid());

  c = c9_certificate();
  c.paths[0].path.vertices = {1, 4};  // 1 and 4 are not adjacent
  CHECK(!verify_subdivision(c9, c).valid());

  c = c9_certificate();
  c.branch[1] = 2;  // reuses a path vertex
  CHECK(!verify_subdivision(c9, c).valid());

  c = c9_certificate();
  c.paths[1].path.vertices = {4, 50};
  CHECK(!verify_subdivision(c9, c).valid());

  c = c9_certificate();
  c.paths[2] = PairPath{0, 1, Path{{8, 7}}};  // pair (0,1) twice, (0,2) missing
  CHECK(!verify_subdivision(c9, c).valid());

  c = c9_certificate();
  c.t = 4;
  CHECK(!verify_subdivision(c9, c).valid());
}

TEST_CASE("every valid certificate contracts to K_t") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int t = 3 + static_cast<int>(seed % 3);
    const auto inst = planted_subdivision(t, uniform_lengths(t, 3 + seed % 4), seed % 9, 0.3, seed);
    REQUIRE(verify_subdivision(inst.graph, inst.certificate).valid());
    std::vector<std::vector<int>> joined(t, std::vector<int>(t, 0));
    for (const auto& pp : inst.certificate.paths) {
      const auto& v = pp.path.vertices;
      CHECK(inst.graph.adjacent(inst.certificate.branch[pp.i], v.front()));
      CHECK(inst.graph.adjacent(inst.certificate.branch[pp.j], v.back()));
      ++joined[pp.i][pp.j];
      ++joined[pp.j][pp.i];
    }
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) CHECK(joined[i][j] == (i == j ? 0 : 1));
  }
}

TEST_CASE("certificate JSON round trip gives identical reports") {
  const Graph c9 = brute::cycle_graph(9);
  CertificateDocument doc;
  doc.n = 9;
  doc.params = CertificateParams{2, 3, 2, Mode::scaled};
  doc.certificate = c9_certificate();
  const std::string text = to_json(doc);
  const CertificateDocument back = parse_certificate(text);
  CHECK(to_json(back) == text);
  const auto& c = std::get<SubdivisionCertificate>(back.certificate);
  CHECK(c == c9_certificate());
  CHECK(verify_subdivision(c9, c).violations ==
        verify_subdivision(c9, c9_certificate()).violations);

  doc.certificate = StableSetCertificate{{0, 2, 4}, ClaimedMode::best_effort};
  doc.regime_failure = "stuck";
  const CertificateDocument stable = parse_certificate(to_json(doc));
  CHECK(std::get<StableSetCertificate>(stable.certificate).claimed_mode ==
        ClaimedMode::best_effort);
  CHECK(stable.regime_failure == std::optional<std::string>("stuck"));
}

TEST_CASE("certificate JSON schema errors") {
  CHECK_THROWS_AS(parse_certificate("{"), CertificateError);
  CHECK_THROWS_AS(parse_certificate("[]"), CertificateError);
  CHECK_THROWS_AS(parse_certificate(R"({"type":"stable","params":{"k":2,"t":3,"d":2,"mode":"faithful"},"set":[]})"),
                  CertificateError);
  CHECK_THROWS_AS(parse_certificate(R"({"type":"stable","n":3,"params":{"k":2,"t":3,"d":2,"mode":"fast"},"set":[]})"),
                  CertificateError);
  CHECK_THROWS_AS(parse_certificate(R"({"type":"clique","n":3,"params":{"k":2,"t":3,"d":2,"mode":"scaled"}})"),
                  CertificateError);
  CHECK_THROWS_AS(parse_certificate(R"({"type":"stable","n":3,"params":{"k":2,"t":3,"d":2,"mode":"scaled"},"set":[-1]})"),
                  CertificateError);
  CHECK_THROWS_AS(parse_certificate(R"({"type":"subdivision","n":9,"params":{"k":2,"t":3,"d":2,"mode":"scaled"},"branch":[0,3,6],"paths":[{"pair":[0],"vertices":[1,2]}]})"),
                  CertificateError);
  const auto doc = parse_certificate(
      R"({"type":"subdivision","n":9,"params":{"k":2,"t":3,"d":2,"mode":"scaled"},"branch":[0,3,6],"paths":[]})");
  const auto& c = std::get<SubdivisionCertificate>(doc.certificate);
  CHECK(c.min_len == 3);
  CHECK(c.max_len == max_subdivision_length(9));
}

}  // TEST_SUITE
