#pragma once

namespace holder {

inline constexpr const char* kToolkitVersion = "0.1.0";

}
