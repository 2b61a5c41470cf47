#pragma once

#define SCL_VERSION_MAJOR 0
#define SCL_VERSION_MINOR 1
#define SCL_VERSION_PATCH 0
#define SCL_VERSION_STRING "0.1.0"

namespace scl {
inline const char* version() { return SCL_VERSION_STRING; }
}  // namespace scl
