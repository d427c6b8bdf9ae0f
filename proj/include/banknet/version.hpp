#pragma once

namespace banknet {

inline constexpr const char* kVersion = "0.1.0";

} // namespace banknet
