#pragma once

namespace gebs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gebs
