#pragma once

namespace hts {

inline constexpr const char* version = "0.1.0";

}  // namespace hts
