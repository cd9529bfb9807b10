#pragma once

namespace weakconv {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace weakconv
