#include "hankel_lti/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hankel_lti/serialize.hpp"
#include "hankel_lti/types.hpp"
#include "hankel_lti/version.hpp"

namespace hlti {

using nlohmann::json;

std::string current_timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

std::string to_json_string(const RunManifest& manifest) {
  json j;
  j["command"] = manifest.command;
  j["arguments"] = manifest.arguments;
  j["seed"] = manifest.seed;
  j["timestamp"] = manifest.timestamp;
  j["library_version"] = manifest.library_version;
  j["outputs"] = json::array();
  for (const auto& out : manifest.outputs)
    j["outputs"].push_back({{"path", out.path}, {"sha256", out.sha256}});
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json_string(const std::string& json_text) {
  const json j = json::parse(json_text);
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.arguments = j.at("arguments").get<std::vector<std::string>>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.timestamp = j.at("timestamp").get<std::string>();
  m.library_version = j.at("library_version").get<std::string>();
  for (const auto& out : j.at("outputs"))
    m.outputs.push_back({out.at("path").get<std::string>(), out.at("sha256").get<std::string>()});
  return m;
}

void write_manifest(const std::string& path, const RunManifest& manifest) {
  std::ofstream f(path, std::ios::binary);
  require(f.good(), "cannot open manifest for writing: " + path);
  const std::string body = to_json_string(manifest);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  require(f.good(), "failed writing manifest: " + path);
}

RunManifest read_manifest(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(f.good(), "cannot open manifest: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return manifest_from_json_string(os.str());
}

// ---- system fixtures ----

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  return Complex{j.at(0).get<double>(), j.at(1).get<double>()};
}

json vec_to_json(const ComplexVector& v) {
  json arr = json::array();
  for (const auto& z : v) arr.push_back(complex_to_json(z));
  return arr;
}

ComplexVector vec_from_json(const json& j) {
  ComplexVector v;
  for (const auto& item : j) v.push_back(complex_from_json(item));
  return v;
}

template <typename Sys>
json diagonal_to_json(const Sys& sys, const char* kind) {
  json j;
  j["kind"] = kind;
  j["n"] = sys.order();
  j["a"] = vec_to_json(sys.a);
  j["b"] = vec_to_json(sys.b);
  j["c"] = vec_to_json(sys.c);
  j["d"] = complex_to_json(sys.d);
  return j;
}

template <typename Sys>
Sys diagonal_from_json(const json& j, const char* kind) {
  require(j.at("kind").get<std::string>() == kind,
          std::string("expected a '") + kind + "' fixture");
  Sys sys;
  sys.a = vec_from_json(j.at("a"));
  sys.b = vec_from_json(j.at("b"));
  sys.c = vec_from_json(j.at("c"));
  sys.d = complex_from_json(j.at("d"));
  require(sys.order() == j.at("n").get<std::size_t>(), "fixture order mismatch");
  sys.validate();
  return sys;
}

}  // namespace

std::string to_json_string(const DiagonalContinuousSystem& sys) {
  return diagonal_to_json(sys, "continuous-diagonal").dump(2) + "\n";
}

std::string to_json_string(const DiagonalDiscreteSystem& sys) {
  return diagonal_to_json(sys, "discrete-diagonal").dump(2) + "\n";
}

DiagonalContinuousSystem continuous_from_json_string(const std::string& text) {
  return diagonal_from_json<DiagonalContinuousSystem>(json::parse(text), "continuous-diagonal");
}

DiagonalDiscreteSystem discrete_from_json_string(const std::string& text) {
  return diagonal_from_json<DiagonalDiscreteSystem>(json::parse(text), "discrete-diagonal");
}

std::string to_json_string(const MarkovParams& params) {
  json j;
  j["n"] = params.order();
  j["h"] = vec_to_json(params.h);
  j["d"] = complex_to_json(params.d);
  return j.dump(2) + "\n";
}

MarkovParams markov_from_json_string(const std::string& text) {
  const json j = json::parse(text);
  MarkovParams p;
  p.h = vec_from_json(j.at("h"));
  p.d = complex_from_json(j.at("d"));
  require(p.order() == j.at("n").get<std::size_t>(), "fixture order mismatch");
  return p;
}

}  // namespace hlti
