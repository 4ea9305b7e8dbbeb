#pragma once

namespace ocqst {

inline constexpr const char* version = "0.1.0";

}  // namespace ocqst
