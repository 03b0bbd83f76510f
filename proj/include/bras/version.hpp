#pragma once

namespace bras {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bras
