#pragma once

namespace planarvac {

inline constexpr const char* kVersion = "1.0.0";

}
