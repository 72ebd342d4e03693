#pragma once

namespace rinehart {

inline constexpr const char* kToolName = "rinehart";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace rinehart
