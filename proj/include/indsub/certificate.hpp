#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indsub/bounds.hpp"
#include "indsub/graph.hpp"

namespace indsub {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { faithful, scaled };

enum class ClaimedMode { faithful, scaled, best_effort };

std::string_view to_string(Mode m);
std::string_view to_string(ClaimedMode m);
Mode parse_mode(std::string_view s);
ClaimedMode parse_claimed_mode(std::string_view s);

struct StableSetCertificate {
  std::vector<Vertex> set;  // sorted, distinct
  ClaimedMode claimed_mode = ClaimedMode::faithful;

  bool operator==(const StableSetCertificate&) const = default;
};

/// Path for branch pair (i, j), i < j, as indices into `branch`. The first
/// path vertex is meant to be adjacent to branch[i], the last to branch[j].
struct PairPath {
  int i = 0;
  int j = 0;
  Path path;

  bool operator==(const PairPath&) const = default;
};

struct SubdivisionCertificate {
  int t = 3;
  std::vector<Vertex> branch;
  std::vector<PairPath> paths;
  std::size_t min_len = 3;
  std::size_t max_len = 0;

  bool operator==(const SubdivisionCertificate&) const = default;
};

/// floor((log2 n)^2): the longest subdivision path allowed in an n-vertex host.
std::size_t max_subdivision_length(std::size_t n);

struct StableReport {
  bool is_stable = false;
  std::size_t size = 0;
  std::size_t required = 0;
  bool meets_faithful_bound = false;
};

/// Pairwise edge scan. Throws CertificateError on ids outside the graph or
/// repeated ids.
StableReport verify_stable(const Graph& g, const StableSetCertificate& c,
                           const DerivedConstants& constants);

struct SubdivisionReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

/**
 * Checks every structural requirement of an induced K_t subdivision:
 * shape of the pair map, id range, global distinctness, per-pair total
 * length (path edges plus the two branch edges) in [min_len, max_len],
 * path continuity, and exact inducedness over all vertex pairs of the
 * certificate. Never throws; problems are listed in the report.
 */
SubdivisionReport verify_subdivision(const Graph& g, const SubdivisionCertificate& c);

}  // namespace indsub
