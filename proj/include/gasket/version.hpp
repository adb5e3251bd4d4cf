#pragma once

#include <string_view>

namespace gasket {

inline constexpr std::string_view kToolName = "gasketstat";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace gasket
