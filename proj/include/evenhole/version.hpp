#pragma once

namespace evenhole {

inline constexpr const char* kToolName = "evenhole";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace evenhole
