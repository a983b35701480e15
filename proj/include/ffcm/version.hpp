#pragma once

namespace ffcm {
inline constexpr const char* kVersion = "0.1.0";
}
