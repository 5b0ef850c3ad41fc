#pragma once

#include <string>

namespace parareal {

/// Residual tracing controlled by the PARAREAL_LOG env var: off|info|trace.
enum class LogLevel { off = 0, info = 1, trace = 2 };

LogLevel log_level();
bool log_enabled(LogLevel level);
void log_line(LogLevel level, const std::string& message);

}  // namespace parareal
