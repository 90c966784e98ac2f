#pragma once

namespace tbk {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

}  // namespace tbk
