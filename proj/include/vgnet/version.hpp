#pragma once

namespace vgnet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vgnet
