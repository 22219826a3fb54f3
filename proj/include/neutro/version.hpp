#pragma once

#include <string_view>

namespace neutro {

inline constexpr std::string_view kToolName = "neutro";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace neutro
