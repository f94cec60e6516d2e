#pragma once

namespace flexcolor {

inline constexpr const char* kToolName = "flexcolor";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace flexcolor
