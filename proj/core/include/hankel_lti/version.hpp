#pragma once

namespace hlti {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace hlti
