#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "indsub/certificate_json.hpp"
#include "indsub/extractor.hpp"
#include "indsub/graph.hpp"

namespace indsub {

/// One extraction with its serialized certificate and trace.
struct SolveResult {
  Outcome outcome;
  std::string certificate_json;
  std::string trace_text;  // one formatted record per line
  bool verified = false;
};

SolveResult solve_instance(const Graph& g, const Params& p);

/// Summary of a certificate for tables: the set size, or the path lengths.
std::string describe_certificate(const Outcome& o);

struct DocumentCheck {
  bool valid = false;
  std::vector<std::string> report;
};

/// What `indsub verify` checks: n matches, then the stable set is stable
/// (and meets the main bound if it claims faithful mode), or the subdivision
/// passes verify_subdivision.
DocumentCheck check_document(const Graph& g, const CertificateDocument& doc);

class BenchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchRow {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string outcome;
  std::string certificate;
  std::string deepest_claim;
  double wall_ms = 0;
  bool verified = false;
  std::string certificate_json;
  std::string trace_text;
};

/// Regular files in `dir` sorted by name, skipping *.json.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

/**
 * Solves every file on `jobs` worker threads. Rows come back in input
 * order and, apart from wall_ms, do not depend on `jobs`. A file that
 * cannot be read raises BenchError naming it.
 */
std::vector<BenchRow> run_corpus(const std::vector<std::filesystem::path>& files,
                                 const Params& p, unsigned jobs);

}  // namespace indsub
