#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "indsub/bounds.hpp"
#include "indsub/certificate.hpp"
#include "indsub/certificate_json.hpp"
#include "indsub/graph.hpp"
#include "indsub/star_system.hpp"

namespace indsub {

struct Params {
  int t = 3;
  int k = 2;
  Mode mode = Mode::faithful;

  // Scaled-mode overrides. Faithful runs ignore them and use (2t)^4 and
  // exponent 3 per clique level.
  double star_constant = 1.0;   // replaces (2t)^4
  double log_exponent = 0.0;    // replaces 3 in the exponent 3(k-1)
  double density_margin = 0.25; // fraction of |B_i| (at least 2) that puts a vertex in X2
  bool force_pipeline = false;  // skip the greedy and neighbourhood exits at the top

  std::uint64_t rng_seed = 0;  // reserved; extraction is deterministic
  std::size_t recursion_depth_limit = 4096;
  // Scaled mode: once this many recursive calls have been made, nested calls
  // answer with the greedy stable set.
  std::size_t work_budget = 4000;

  /// Throws DomainError on an illegal combination.
  void validate() const;
  BoundModel bound_model() const;
};

struct TraceRecord {
  std::string_view claim;
  std::string_view branch;
  std::size_t set_size = 0;
  std::size_t depth = 0;
  std::size_t n = 0;
  std::string detail;

  bool operator==(const TraceRecord&) const = default;
};

/// "claim=<id> branch=<name> |set|=<int> depth=<d> n=<n>[ detail]"
std::string format_trace_line(const TraceRecord& r);

struct RegimeFailure {
  std::string diagnostic;
  StableSetCertificate best;  // largest stable set seen during the run

  bool operator==(const RegimeFailure&) const = default;
};

struct Outcome {
  enum class Kind { stable, subdivision, regime_failure };

  std::variant<StableSetCertificate, SubdivisionCertificate, RegimeFailure> result;
  std::vector<TraceRecord> trace;
  std::size_t d = 2;  // degree bound used at the top: max(Delta(G), 2)
  std::size_t calls = 0;

  Kind kind() const { return static_cast<Kind>(result.index()); }
  /// Highest claim number recorded by the top-level call ("base" if none).
  std::string deepest_claim() const;
};

std::string_view to_string(Outcome::Kind k);

/// Raised when a faithful-mode inequality of the proof fails. Carries the
/// trace accumulated up to the failure.
class FaithfulAssertion : public std::logic_error {
 public:
  FaithfulAssertion(const std::string& what, std::vector<TraceRecord> trace)
      : std::logic_error(what), trace_(std::move(trace)) {}
  const std::vector<TraceRecord>& trace() const { return trace_; }

 private:
  std::vector<TraceRecord> trace_;
};

/// Recursion-depth overflow or a certificate the verifier rejects.
class ExtractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Repeatedly takes a minimum-degree vertex (smallest id on ties) of the
/// remaining induced subgraph and deletes its closed neighbourhood.
VertexSet greedy_stable(const Graph& g, const VertexSet& within);
VertexSet greedy_stable(const Graph& g);

/// The forbidden sets of the path-routing phase.
struct ObstructionContext {
  VertexSet x1;       // neighbours of centres
  VertexSet x2;       // outside x1, dense to some leaf set
  VertexSet y;        // union of the paths chosen so far
  VertexSet x3;       // y and its neighbours
  VertexSet allowed;  // view minus x1, x2, x3 and the centres
};

struct LayerState {
  std::size_t i = 0;
  std::size_t r = 0;
  VertexSet layer;
  double L = 0;
  std::vector<std::size_t> history;  // |layer| for r = 0, 1, ...
  std::vector<bool> accepted;        // step r -> r+1 grew by >= 1 + 2/L
};

/**
 * Recursive search that returns either a stable set or an induced
 * subdivision of K_t. All vertex sets are subsets of the top graph, so a
 * certificate found inside any recursion is valid for the top graph as is.
 *
 * The public step functions are exposed for testing; `run` drives them.
 */
class Extractor {
 public:
  struct Stable {
    VertexSet set;
  };
  struct Failure {
    std::string diagnostic;
    VertexSet best;
  };
  using Verdict = std::variant<Stable, SubdivisionCertificate, Failure>;
  template <typename T>
  using Step = std::variant<T, Verdict>;

  Extractor(const Graph& g, Params p);

  Outcome run();

  /// One recursive invocation on the subgraph induced by `view`.
  Verdict solve(const VertexSet& view, int k, std::size_t depth);

  std::optional<Verdict> neighborhood_branch(const VertexSet& view, Vertex v, int k,
                                             std::size_t target, std::size_t depth);
  /// Either a verdict or a vertex of degree > d/2 in view minus `removed`.
  Step<Vertex> removal_branch(const VertexSet& view, const VertexSet& removed, int k,
                              std::size_t d, std::size_t target, std::size_t depth);
  Step<StarSystem> build_star_system(const VertexSet& view, std::size_t length,
                                     double q, int k, std::size_t d,
                                     std::size_t target, std::size_t depth);
  /// Either the size of the closed neighbourhood of `a` or a merged verdict.
  Step<std::size_t> expand_or_merge(const VertexSet& view, const VertexSet& a,
                                    double threshold, int k, std::size_t target,
                                    std::size_t depth);
  ObstructionContext make_context(const VertexSet& view, const StarSystem& sys,
                                  const VertexSet& y) const;
  /// Grows N^r from the leaves of centre i until it covers more than half
  /// of the view. In scaled mode it also stops once it meets or touches
  /// `toward`.
  Step<LayerState> grow_layers(const VertexSet& view, const ObstructionContext& ctx,
                               const StarSystem& sys, std::size_t i,
                               const VertexSet& toward, int k, std::size_t d,
                               std::size_t target, std::size_t depth);
  Step<Path> route_path(const VertexSet& view, const ObstructionContext& ctx,
                        const StarSystem& sys, std::size_t i, std::size_t j,
                        std::size_t depth);
  Step<SubdivisionCertificate> assemble_subdivision(const VertexSet& view,
                                                    const StarSystem& sys, int k,
                                                    std::size_t d, std::size_t target,
                                                    std::size_t depth);

  const std::vector<TraceRecord>& trace() const { return trace_; }
  const Params& params() const { return params_; }
  std::size_t max_len() const { return max_len_; }
  /// Star systems produced by the construction and sparsification steps.
  const std::vector<StarSystem>& star_systems() const { return star_log_; }
  /// Every completed grow_layers run.
  const std::vector<LayerState>& layer_log() const { return layer_log_; }

 private:
  Verdict pipeline(const VertexSet& view, int k, std::size_t d, std::size_t target,
                   std::size_t depth);
  std::variant<VertexSet, Verdict> take_stable(Verdict v, const char* claim,
                                               std::size_t depth);
  Verdict fail(const VertexSet& view, std::size_t depth, std::string diagnostic);
  void note(std::string_view claim, std::string_view branch, std::size_t set_size,
            std::size_t depth, std::size_t n, std::string detail = {});
  void faithful_check(bool ok, std::string_view claim, const std::string& what);
  void record_best(const VertexSet& s);
  double x2_threshold(std::size_t n, std::size_t leaf_count) const;

  const Graph& g_;
  Params params_;
  BoundModel model_;
  std::size_t max_len_ = 0;
  std::size_t calls_ = 0;
  VertexSet best_;
  std::vector<TraceRecord> trace_;
  std::vector<StarSystem> star_log_;
  std::vector<LayerState> layer_log_;
};

Outcome extract(const Graph& g, const Params& p);

/// Certificate document for an outcome (the best stable set for a regime
/// failure, annotated with the diagnostic).
CertificateDocument to_document(const Graph& g, const Params& p, const Outcome& o);

/// Runs the independent verifiers on the outcome's certificate. Faithful
/// stable outcomes must also meet the main bound.
bool outcome_verifies(const Graph& g, const Params& p, const Outcome& o);

}  // namespace indsub
