#pragma once

namespace nuphase {

inline constexpr const char* nuphase_version = "0.1.0";

} // namespace nuphase
