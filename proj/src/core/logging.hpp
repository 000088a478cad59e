#pragma once

#include <cstdio>

namespace dirgrad::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Threshold comes from the DIRGRAD_LOG environment variable
// (error|warn|info|debug), read once per process. Default: warn.
Level threshold();

bool enabled(Level level);

void write(Level level, const char* fmt, ...)
#if defined(__GNUC__)
    __attribute__((format(printf, 2, 3)))
#endif
    ;

}  // namespace dirgrad::log

#define DIRGRAD_LOG_ERROR(...) ::dirgrad::log::write(::dirgrad::log::Level::Error, __VA_ARGS__)
#define DIRGRAD_LOG_WARN(...) ::dirgrad::log::write(::dirgrad::log::Level::Warn, __VA_ARGS__)
#define DIRGRAD_LOG_INFO(...) ::dirgrad::log::write(::dirgrad::log::Level::Info, __VA_ARGS__)
#define DIRGRAD_LOG_DEBUG(...) ::dirgrad::log::write(::dirgrad::log::Level::Debug, __VA_ARGS__)
