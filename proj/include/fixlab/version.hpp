#pragma once

#include <string_view>

namespace fixlab {

inline constexpr std::string_view kToolName = "fixlab";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace fixlab
