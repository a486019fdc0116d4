#pragma once

#include <string_view>

namespace lcsw {

inline constexpr std::string_view kToolName = "lcsw";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace lcsw
