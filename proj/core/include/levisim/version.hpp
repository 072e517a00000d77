#pragma once

namespace levisim {

inline constexpr const char* k_version = "0.1.0";
inline constexpr int k_solution_format = 1;

}  // namespace levisim
