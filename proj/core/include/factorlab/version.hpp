#pragma once

namespace factorlab {
inline constexpr const char* kToolVersion = "1.0.0";
}
