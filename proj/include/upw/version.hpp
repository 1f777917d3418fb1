#pragma once

namespace upw {

inline constexpr const char* version = "0.1.0";

}  // namespace upw
