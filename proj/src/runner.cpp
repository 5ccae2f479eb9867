#include "indsub/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

#include "indsub/certificate_json.hpp"
#include "indsub/graph_io.hpp"

namespace indsub {

SolveResult solve_instance(const Graph& g, const Params& p) {
  SolveResult r{extract(g, p), {}, {}, false};
  r.certificate_json = to_json(to_document(g, p, r.outcome));
  std::ostringstream trace;
  for (const auto& rec : r.outcome.trace) trace << format_trace_line(rec) << '\n';
  r.trace_text = trace.str();
  r.verified = outcome_verifies(g, p, r.outcome);
  return r;
}

std::string describe_certificate(const Outcome& o) {
  if (const auto* c = std::get_if<SubdivisionCertificate>(&o.result)) {
    std::ostringstream s;
    s << "lengths=";
    for (std::size_t i = 0; i < c->paths.size(); ++i)
      s << (i ? "," : "") << c->paths[i].path.length() + 2;
    return s.str();
  }
  if (const auto* s = std::get_if<StableSetCertificate>(&o.result))
    return "size=" + std::to_string(s->set.size());
  return "size=" + std::to_string(std::get<RegimeFailure>(o.result).best.set.size());
}

DocumentCheck check_document(const Graph& g, const CertificateDocument& doc) {
  DocumentCheck out;
  if (doc.n != g.order()) {
    out.report.push_back("certificate is for n=" + std::to_string(doc.n) + " but the graph has " +
                         std::to_string(g.order()) + " vertices");
    return out;
  }
  if (const auto* s = std::get_if<StableSetCertificate>(&doc.certificate)) {
    StableReport r;
    try {
      r = verify_stable(g, *s, DerivedConstants::make(doc.n, doc.params.k, doc.params.t,
                                                      doc.params.d));
    } catch (const CertificateError& e) {
      out.report.push_back(e.what());
      return out;
    }
    std::ostringstream line;
    line << "stable set: size " << r.size << ", stable " << (r.is_stable ? "yes" : "no")
         << ", required " << r.required << ", meets bound "
         << (r.meets_faithful_bound ? "yes" : "no");
    out.report.push_back(line.str());
    if (doc.regime_failure) out.report.push_back("regime failure recorded: " + *doc.regime_failure);
    const bool bound_needed = s->claimed_mode == ClaimedMode::faithful;
    out.valid = r.is_stable && (!bound_needed || r.meets_faithful_bound);
    return out;
  }
  const auto& c = std::get<SubdivisionCertificate>(doc.certificate);
  const SubdivisionReport r = verify_subdivision(g, c);
  for (const auto& v : r.violations) out.report.push_back("violation: " + v);
  out.report.push_back("subdivision of K_" + std::to_string(c.t) + " with " +
                       std::to_string(c.paths.size()) + " paths");
  out.valid = r.valid();
  return out;
}

std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw BenchError("cannot list corpus directory " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> out;
  for (const auto& e : it) {
    if (e.path().extension() == ".json") continue;
    if (e.is_directory()) continue;
    out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

BenchRow bench_one(const std::filesystem::path& file, const Params& p) {
  Graph g;
  try {
    g = read_graph_file(file);
  } catch (const std::exception& e) {
    throw BenchError(e.what());
  }
  const auto start = std::chrono::steady_clock::now();
  SolveResult r = solve_instance(g, p);
  const auto stop = std::chrono::steady_clock::now();
  BenchRow row;
  row.name = file.filename().string();
  row.n = g.order();
  row.m = g.edge_count();
  row.outcome = std::string(to_string(r.outcome.kind()));
  row.certificate = describe_certificate(r.outcome);
  row.deepest_claim = r.outcome.deepest_claim();
  row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  row.verified = r.verified;
  row.certificate_json = std::move(r.certificate_json);
  row.trace_text = std::move(r.trace_text);
  return row;
}

}  // namespace

std::vector<BenchRow> run_corpus(const std::vector<std::filesystem::path>& files,
                                 const Params& p, unsigned jobs) {
  p.validate();
  std::vector<BenchRow> rows(files.size());
  std::vector<std::exception_ptr> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        rows[i] = bench_one(files[i], p);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, files.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const BenchError&) {
      throw;
    } catch (const std::exception& e) {
      throw BenchError(files[i].string() + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace indsub
