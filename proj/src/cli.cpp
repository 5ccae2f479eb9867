#include "indsub/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "indsub/certificate_json.hpp"
#include "indsub/extractor.hpp"
#include "indsub/generators.hpp"
#include "indsub/graph_io.hpp"
#include "indsub/oracle.hpp"
#include "indsub/runner.hpp"
#include "json.hpp"

namespace indsub {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("error writing " + path);
}

struct ParamFlags {
  int t = 3;
  int k = 2;
  std::string mode = "faithful";
  Params scaled_defaults;
  CLI::Option* overrides[5] = {};
  std::uint64_t seed = 0;

  void add(CLI::App* app) {
    app->add_option("--t", t, "order of the excluded subdivision (>= 3)")->capture_default_str();
    app->add_option("--k", k, "clique bound (>= 1)")->capture_default_str();
    app->add_option("--mode", mode, "faithful or scaled")
        ->check(CLI::IsMember({"faithful", "scaled"}))
        ->capture_default_str();
    overrides[0] = app->add_option("--star-constant", scaled_defaults.star_constant,
                                   "scaled: replaces (2t)^4");
    overrides[1] = app->add_option("--log-exponent", scaled_defaults.log_exponent,
                                   "scaled: replaces 3 in the log exponent");
    overrides[2] = app->add_option("--density-margin", scaled_defaults.density_margin,
                                   "scaled: X2 density fraction in (0, 1]");
    overrides[3] = app->add_option("--work-budget", scaled_defaults.work_budget,
                                   "scaled: recursive calls before nested calls go greedy");
    overrides[4] = app->add_flag("--force-pipeline", scaled_defaults.force_pipeline,
                                 "scaled: skip the early exits of the top call");
    app->add_option("--seed", seed, "recorded only; extraction is deterministic");
  }

  Params build() const {
    Params p = scaled_defaults;
    p.t = t;
    p.k = k;
    p.mode = parse_mode(mode);
    p.rng_seed = seed;
    if (p.mode == Mode::faithful)
      for (auto* o : overrides)
        if (o->count() > 0)
          throw InputError("faithful mode takes no " + o->get_name() +
                           "; use --mode scaled");
    p.validate();
    return p;
  }
};

int cmd_solve(const std::string& graph_path, const ParamFlags& flags,
              const std::string& out_path, const std::string& trace_path, std::ostream& out,
              std::ostream& err) {
  const Params p = flags.build();
  const Graph g = read_graph_file(graph_path);
  SolveResult r = solve_instance(g, p);
  if (out_path.empty())
    out << r.certificate_json;
  else
    write_text(out_path, r.certificate_json);
  if (!trace_path.empty()) write_text(trace_path, r.trace_text);
  err << "outcome: " << to_string(r.outcome.kind()) << " (" << describe_certificate(r.outcome)
      << "), deepest claim " << r.outcome.deepest_claim() << "\n";
  if (const auto* f = std::get_if<RegimeFailure>(&r.outcome.result))
    err << "regime failure: " << f->diagnostic << "\n";
  if (!r.verified) {
    err << "error: the certificate failed independent verification\n";
    return kExitInvalid;
  }
  switch (r.outcome.kind()) {
    case Outcome::Kind::stable:
      return kExitStable;
    case Outcome::Kind::subdivision:
      return kExitSubdivision;
    case Outcome::Kind::regime_failure:
      return kExitRegimeFailure;
  }
  return kExitInvalid;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, std::ostream& err) {
  const Graph g = read_graph_file(graph_path);
  const CertificateDocument doc = read_certificate_file(cert_path);
  const DocumentCheck check = check_document(g, doc);
  for (const auto& line : check.report) err << line << "\n";
  err << (check.valid ? "valid" : "invalid") << "\n";
  return check.valid ? 0 : kExitInvalid;
}

int cmd_bench(const std::string& dir, const ParamFlags& flags, unsigned jobs,
              const std::string& out_dir, std::ostream& out, std::ostream& err) {
  const Params p = flags.build();
  const auto files = corpus_files(dir);
  const auto rows = run_corpus(files, p, jobs);
  out << std::left << std::setw(28) << "instance" << std::right << std::setw(7) << "n"
      << std::setw(9) << "m" << "  " << std::left << std::setw(15) << "outcome"
      << std::setw(22) << "certificate" << std::setw(10) << "deepest" << std::right
      << std::setw(11) << "ms" << "  verified\n";
  std::size_t passed = 0;
  for (const auto& row : rows) {
    out << std::left << std::setw(28) << row.name << std::right << std::setw(7) << row.n
        << std::setw(9) << row.m << "  " << std::left << std::setw(15) << row.outcome
        << std::setw(22) << row.certificate << std::setw(10) << row.deepest_claim
        << std::right << std::setw(11) << std::fixed << std::setprecision(2) << row.wall_ms
        << "  " << (row.verified ? "yes" : "NO") << "\n";
    passed += row.verified ? 1 : 0;
    if (!out_dir.empty()) {
      write_text(out_dir + "/" + row.name + ".json", row.certificate_json);
      write_text(out_dir + "/" + row.name + ".trace", row.trace_text);
    }
  }
  const double rate = rows.empty() ? 100.0 : 100.0 * passed / rows.size();
  out << "verification pass rate: " << std::fixed << std::setprecision(2) << rate << "% ("
      << passed << "/" << rows.size() << ")\n";
  if (passed != rows.size()) {
    err << "error: " << rows.size() - passed << " certificate(s) failed verification\n";
    return kExitInvalid;
  }
  return 0;
}

using Json = nlohmann::ordered_json;

int cmd_oracle(const std::string& what, const std::string& graph_path, int t, std::size_t lo,
               std::size_t hi, std::size_t size_limit, std::size_t budget, std::ostream& out) {
  const Graph g = read_graph_file(graph_path);
  Json j;
  if (what == "alpha") {
    const VertexSet s = oracle::exact_max_stable(g, budget);
    j["alpha"] = s.size();
    j["set"] = s.to_vector();
    out << j.dump(2) << "\n";
    return 0;
  }
  if (hi == 0) hi = what == "cycle" ? g.order() : std::max<std::size_t>(3, max_subdivision_length(g.order()));
  if (what == "cycle") {
    const auto c = oracle::induced_cycle_in_range(g, lo, hi, size_limit);
    j["found"] = c.has_value();
    if (c) {
      j["length"] = c->size();
      j["cycle"] = *c;
    }
    out << j.dump(2) << "\n";
    return c ? 0 : kExitInvalid;
  }
  const auto c = oracle::exhaustive_subdivision_search(g, t, lo, hi, size_limit);
  if (!c) {
    j["found"] = false;
    out << j.dump(2) << "\n";
    return kExitInvalid;
  }
  CertificateDocument doc;
  doc.n = g.order();
  const std::size_t d = g.order() == 0 ? 2 : std::max<std::size_t>(2, max_degree(g, g.all()).degree);
  doc.params = CertificateParams{std::max(1, t - 1), t, d, Mode::scaled};
  doc.certificate = *c;
  out << to_json(doc);
  return 0;
}

struct GenFlags {
  std::size_t n = 16;
  double p = 0.1;
  std::uint64_t seed = 0;
  int t = 3;
  std::size_t length = 3;
  std::vector<std::size_t> lengths;
  std::size_t noise_n = 0;
  double noise_p = 0.1;
  std::string out;
  std::string cert;
};

int cmd_gen(const std::string& kind, const GenFlags& f, std::ostream& out) {
  Graph g;
  std::vector<std::string> meta;
  std::optional<SubdivisionCertificate> planted;
  if (kind == "gnp") {
    g = gnp(f.n, f.p, f.seed);
    meta = gnp_metadata(f.n, f.p, f.seed);
  } else if (kind == "chordal") {
    ChordalGraph c = chordal(f.n, f.seed);
    g = std::move(c.graph);
    meta = chordal_metadata(f.n, f.seed);
    std::ostringstream peo;
    peo << "peo";
    for (Vertex v : c.elimination_order) peo << ' ' << v;
    meta.push_back(peo.str());
  } else {
    PairLengths lengths = uniform_lengths(f.t, f.length);
    if (!f.lengths.empty()) {
      if (f.lengths.size() != lengths.size())
        throw InputError("--lengths needs " + std::to_string(lengths.size()) +
                         " values, one per pair in lexicographic order");
      std::size_t i = 0;
      for (auto& [pair, len] : lengths) len = f.lengths[i++];
    }
    PlantedInstance inst = planted_subdivision(f.t, lengths, f.noise_n, f.noise_p, f.seed);
    g = std::move(inst.graph);
    meta = planted_metadata(f.t, lengths, f.noise_n, f.noise_p, f.seed);
    planted = std::move(inst.certificate);
  }
  if (f.out.empty())
    write_graph(out, g, meta);
  else
    write_graph_file(f.out, g, meta);
  if (planted && !f.cert.empty()) {
    CertificateDocument doc;
    doc.n = g.order();
    const std::size_t d = std::max<std::size_t>(2, max_degree(g, g.all()).degree);
    doc.params = CertificateParams{std::max(1, f.t - 1), f.t, d, Mode::scaled};
    doc.certificate = *planted;
    write_text(f.cert, to_json(doc));
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified stable sets or induced K_t subdivisions", "indsub"};
  app.require_subcommand(1);

  ParamFlags solve_flags;
  std::string solve_graph, solve_out, solve_trace;
  auto* solve = app.add_subcommand("solve", "extract a certificate from a graph file");
  solve->add_option("graph", solve_graph, "graph file")->required();
  solve_flags.add(solve);
  solve->add_option("--out", solve_out, "certificate JSON path (default: stdout)");
  solve->add_option("--trace", solve_trace, "trace log path");

  std::string verify_graph, verify_cert;
  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("graph", verify_graph, "graph file")->required();
  verify->add_option("certificate", verify_cert, "certificate JSON")->required();

  ParamFlags bench_flags;
  std::string bench_dir, bench_out;
  unsigned jobs = 1;
  auto* bench = app.add_subcommand("bench", "solve and verify every graph in a directory");
  bench->add_option("corpus", bench_dir, "directory of graph files")->required();
  bench_flags.add(bench);
  bench->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--out-dir", bench_out, "write <name>.json and <name>.trace here");

  std::string oracle_kind, oracle_graph;
  int oracle_t = 3;
  std::size_t lo = 3, hi = 0, size_limit = 0, budget = 50'000'000;
  auto* orc = app.add_subcommand("oracle", "exact solvers for small graphs");
  orc->add_option("kind", oracle_kind, "alpha, cycle or subdivision")
      ->required()
      ->check(CLI::IsMember({"alpha", "cycle", "subdivision"}));
  orc->add_option("graph", oracle_graph, "graph file")->required();
  orc->add_option("--t", oracle_t, "subdivision order");
  orc->add_option("--lo", lo, "shortest allowed length");
  orc->add_option("--hi", hi, "longest allowed length (default: n for cycles, floor(log2(n)^2) otherwise)");
  orc->add_option("--size-limit", size_limit, "largest n accepted (default 40 / 15)");
  orc->add_option("--budget", budget, "search nodes for alpha");

  GenFlags gen_flags;
  std::string gen_kind;
  auto* gen = app.add_subcommand("gen", "write a generated graph");
  gen->add_option("kind", gen_kind, "gnp, chordal or planted")
      ->required()
      ->check(CLI::IsMember({"gnp", "chordal", "planted"}));
  gen->add_option("--n", gen_flags.n, "vertices (gnp, chordal)");
  gen->add_option("--p", gen_flags.p, "edge probability (gnp)");
  gen->add_option("--seed", gen_flags.seed, "random seed");
  gen->add_option("--t", gen_flags.t, "planted: order");
  gen->add_option("--length", gen_flags.length, "planted: length of every path");
  gen->add_option("--lengths", gen_flags.lengths, "planted: per-pair lengths, lexicographic")
      ->delimiter(',');
  gen->add_option("--noise-n", gen_flags.noise_n, "planted: extra vertices");
  gen->add_option("--noise-p", gen_flags.noise_p, "planted: noise edge probability");
  gen->add_option("--out", gen_flags.out, "graph path (default: stdout)");
  gen->add_option("--cert", gen_flags.cert, "planted: certificate JSON path");

  std::vector<std::string> argv_store{"indsub"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*solve) return cmd_solve(solve_graph, solve_flags, solve_out, solve_trace, out, err);
    if (*verify) return cmd_verify(verify_graph, verify_cert, err);
    if (*bench) return cmd_bench(bench_dir, bench_flags, jobs, bench_out, out, err);
    if (*orc) {
      if (size_limit == 0) size_limit = oracle_kind == "cycle" ? 40 : 15;
      return cmd_oracle(oracle_kind, oracle_graph, oracle_t, lo, hi, size_limit, budget, out);
    }
    return cmd_gen(gen_kind, gen_flags, out);
  } catch (const BenchError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const oracle::OracleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace indsub
