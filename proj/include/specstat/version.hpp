#pragma once

namespace specstat {

inline constexpr const char* kToolVersion = "0.1.0";
// Version tag of the frozen fitted constants used by tests and reports.
inline constexpr const char* kFixtureVersion = "fixtures-2026.08";

}  // namespace specstat
