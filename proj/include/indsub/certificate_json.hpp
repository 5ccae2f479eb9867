#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include "indsub/certificate.hpp"

namespace indsub {

struct CertificateParams {
  int k = 2;
  int t = 3;
  std::size_t d = 2;
  Mode mode = Mode::faithful;

  bool operator==(const CertificateParams&) const = default;
};

/**
 * Interchange form of a certificate:
 *
 *   {"type": "stable" | "subdivision", "n": N,
 *    "params": {"k": K, "t": T, "d": D, "mode": "faithful" | "scaled"},
 *    "set": [ids]                                          (stable)
 *    "branch": [ids], "paths": [{"pair": [i, j], "vertices": [ids]}],
 *    "min_len": 3, "max_len": L                            (subdivision)
 *    "claimed_mode": ...,  "regime_failure": "..."         (optional)}
 *
 * Pair indices are 0-based positions in "branch". A missing min_len/max_len
 * defaults to 3 and floor((log2 n)^2).
 */
struct CertificateDocument {
  std::size_t n = 0;
  CertificateParams params;
  std::variant<StableSetCertificate, SubdivisionCertificate> certificate;
  std::optional<std::string> regime_failure;

  bool operator==(const CertificateDocument&) const = default;
};

/// Deterministic serialisation (fixed key order, two-space indent).
std::string to_json(const CertificateDocument& doc);

/// Throws CertificateError on malformed JSON or schema violations.
CertificateDocument parse_certificate(const std::string& text);
CertificateDocument read_certificate_file(const std::filesystem::path& path);

}  // namespace indsub
