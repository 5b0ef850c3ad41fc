#include "parareal/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace parareal {

namespace {

LogLevel read_env() {
    const char* v = std::getenv("PARAREAL_LOG");
    if (v == nullptr || std::strcmp(v, "off") == 0 || *v == '\0') return LogLevel::off;
    if (std::strcmp(v, "info") == 0) return LogLevel::info;
    if (std::strcmp(v, "trace") == 0) return LogLevel::trace;
    return LogLevel::off;
}

}  // namespace

LogLevel log_level() {
    static const LogLevel level = read_env();
    return level;
}

bool log_enabled(LogLevel level) { return log_level() >= level; }

void log_line(LogLevel level, const std::string& message) {
    if (log_enabled(level)) std::fprintf(stderr, "[parareal] %s\n", message.c_str());
}

}  // namespace parareal
