#pragma once

namespace quncert {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace quncert
