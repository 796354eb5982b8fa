#pragma once

namespace padiclab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "padic-ode-lab/1";

}  // namespace padiclab
