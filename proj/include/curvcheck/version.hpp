#pragma once

namespace curvcheck {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace curvcheck
