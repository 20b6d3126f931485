#pragma once

namespace clearbound {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace clearbound
