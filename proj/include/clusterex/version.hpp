#pragma once

namespace clusterex {

inline constexpr const char* kToolName = "clusterex";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace clusterex
