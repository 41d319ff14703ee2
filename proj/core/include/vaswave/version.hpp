#pragma once

namespace vaswave {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vaswave
