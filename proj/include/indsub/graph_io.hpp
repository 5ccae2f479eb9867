#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "indsub/graph.hpp"

namespace indsub {

/**
 * Text format: a header line "n m" followed by m lines "u v" with
 * 0 <= u < v < n. Lines whose first non-blank character is '#' are
 * comments and may appear anywhere; generators use them for metadata.
 *
 * Parse failures throw GraphError with a line number.
 */
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);

/// Writes the header, then `comments` as "# ..." lines, then the edges.
void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& comments = {});
void write_graph_file(const std::filesystem::path& path, const Graph& g,
                      const std::vector<std::string>& comments = {});

}  // namespace indsub
