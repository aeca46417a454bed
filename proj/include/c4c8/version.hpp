#pragma once

namespace c4c8 {

inline constexpr const char* kToolName = "c4c8";
inline constexpr const char* kToolVersion = "0.1.0";

// Bumped whenever the JSON report layout changes shape.
inline constexpr int kReportSchemaMajor = 1;
inline constexpr int kReportSchemaMinor = 0;

}  // namespace c4c8
