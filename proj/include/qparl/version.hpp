#pragma once

namespace qparl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qparl
