#pragma once

namespace plurikit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace plurikit
