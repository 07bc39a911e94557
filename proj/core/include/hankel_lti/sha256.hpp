#pragma once

#include <cstdint>
#include <string>

namespace hlti {

/// Lowercase hex SHA-256 digest; used for the content hashes in run manifests.
std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::string& path);

}  // namespace hlti
