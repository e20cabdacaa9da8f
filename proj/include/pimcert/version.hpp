#pragma once

namespace pimcert {

inline constexpr const char* kToolName = "pimcert";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace pimcert
