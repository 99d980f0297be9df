#pragma once

namespace c5 {

inline constexpr const char* kToolName = "c5tool";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace c5
