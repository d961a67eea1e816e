#pragma once

namespace qlie {

inline constexpr const char* kToolName = "qlie";
inline constexpr const char* kVersion = "1.0.0";

} // namespace qlie
