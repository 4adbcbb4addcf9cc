#pragma once

namespace covosc {

inline constexpr const char* version = "0.1.0";

}  // namespace covosc
