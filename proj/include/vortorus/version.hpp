#pragma once

namespace vortorus {

inline constexpr const char* kVersion = "0.1.0";

} // namespace vortorus
