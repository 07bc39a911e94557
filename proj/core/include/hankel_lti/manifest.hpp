#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hlti {

/// Reproducibility record written next to every experiment artifact.
/// Replaying the stored command line with the stored seed must reproduce
/// every listed file byte-for-byte (hashes match).
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;  // flags exactly as parsed
  std::uint64_t seed = 0;
  std::string timestamp;               // ISO-8601 UTC
  std::string library_version;

  struct Output {
    std::string path;    // relative to the manifest location
    std::string sha256;
  };
  std::vector<Output> outputs;
};

std::string to_json_string(const RunManifest& manifest);
RunManifest manifest_from_json_string(const std::string& json_text);

void write_manifest(const std::string& path, const RunManifest& manifest);
RunManifest read_manifest(const std::string& path);

std::string current_timestamp_utc();

}  // namespace hlti
