#pragma once

namespace goldbach {

inline constexpr const char* kVersion = "0.1.0";

} // namespace goldbach
