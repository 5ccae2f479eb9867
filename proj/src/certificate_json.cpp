#include "indsub/certificate_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace indsub {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema(const std::string& what) {
  throw CertificateError("certificate schema: " + what);
}

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    schema(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<Vertex> as_ids(const Json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    const auto v = as_size(e, what);
    if (v > 0xFFFFFFFFULL) schema(std::string(what) + " id too large");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace

std::string to_json(const CertificateDocument& doc) {
  Json j;
  const bool stable = std::holds_alternative<StableSetCertificate>(doc.certificate);
  j["type"] = stable ? "stable" : "subdivision";
  j["n"] = doc.n;
  j["params"] = {{"k", doc.params.k},
                 {"t", doc.params.t},
                 {"d", doc.params.d},
                 {"mode", std::string(to_string(doc.params.mode))}};
  if (stable) {
    const auto& c = std::get<StableSetCertificate>(doc.certificate);
    j["set"] = c.set;
    j["claimed_mode"] = std::string(to_string(c.claimed_mode));
  } else {
    const auto& c = std::get<SubdivisionCertificate>(doc.certificate);
    j["branch"] = c.branch;
    Json paths = Json::array();
    for (const auto& pp : c.paths)
      paths.push_back({{"pair", {pp.i, pp.j}}, {"vertices", pp.path.vertices}});
    j["paths"] = std::move(paths);
    j["min_len"] = c.min_len;
    j["max_len"] = c.max_len;
  }
  if (doc.regime_failure) j["regime_failure"] = *doc.regime_failure;
  return j.dump(2) + "\n";
}

CertificateDocument parse_certificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CertificateError(std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) schema("top level must be an object");

  CertificateDocument doc;
  doc.n = as_size(field(j, "n"), "n");

  const Json& params = field(j, "params");
  if (!params.is_object()) schema("params must be an object");
  doc.params.k = as_int(field(params, "k"), "params.k");
  doc.params.t = as_int(field(params, "t"), "params.t");
  doc.params.d = as_size(field(params, "d"), "params.d");
  const Json& mode = field(params, "mode");
  if (!mode.is_string()) schema("params.mode must be a string");
  doc.params.mode = parse_mode(mode.get<std::string>());
  if (doc.params.k < 1) schema("params.k must be at least 1");
  if (doc.params.t < 3) schema("params.t must be at least 3");

  const Json& type = field(j, "type");
  if (!type.is_string()) schema("type must be a string");
  const auto kind = type.get<std::string>();
  if (kind == "stable") {
    StableSetCertificate c;
    c.set = as_ids(field(j, "set"), "set");
    c.claimed_mode =
        doc.params.mode == Mode::faithful ? ClaimedMode::faithful : ClaimedMode::scaled;
    if (auto it = j.find("claimed_mode"); it != j.end()) {
      if (!it->is_string()) schema("claimed_mode must be a string");
      c.claimed_mode = parse_claimed_mode(it->get<std::string>());
    }
    doc.certificate = std::move(c);
  } else if (kind == "subdivision") {
    SubdivisionCertificate c;
    c.t = doc.params.t;
    c.branch = as_ids(field(j, "branch"), "branch");
    const Json& paths = field(j, "paths");
    if (!paths.is_array()) schema("paths must be an array");
    for (const auto& p : paths) {
      if (!p.is_object()) schema("each path must be an object");
      const Json& pair = field(p, "pair");
      if (!pair.is_array() || pair.size() != 2) schema("pair must be [i, j]");
      PairPath pp;
      pp.i = as_int(pair[0], "pair");
      pp.j = as_int(pair[1], "pair");
      pp.path.vertices = as_ids(field(p, "vertices"), "vertices");
      c.paths.push_back(std::move(pp));
    }
    c.min_len = j.contains("min_len") ? as_size(j["min_len"], "min_len") : 3;
    c.max_len = j.contains("max_len") ? as_size(j["max_len"], "max_len")
                                      : max_subdivision_length(doc.n);
    doc.certificate = std::move(c);
  } else {
    schema("unknown type '" + kind + "'");
  }
  if (auto it = j.find("regime_failure"); it != j.end()) {
    if (!it->is_string()) schema("regime_failure must be a string");
    doc.regime_failure = it->get<std::string>();
  }
  return doc;
}

CertificateDocument read_certificate_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CertificateError("cannot open certificate file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_certificate(ss.str());
}

}  // namespace indsub
