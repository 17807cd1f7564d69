#pragma once

namespace permkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace permkit
