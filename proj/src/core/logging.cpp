#include "core/logging.hpp"

#include <cstdarg>
#include <cstdlib>
#include <cstring>

namespace dirgrad::log {

namespace {

Level parse_level(const char* text) {
  if (text == nullptr) return Level::Warn;
  if (std::strcmp(text, "error") == 0) return Level::Error;
  if (std::strcmp(text, "warn") == 0) return Level::Warn;
  if (std::strcmp(text, "info") == 0) return Level::Info;
  if (std::strcmp(text, "debug") == 0) return Level::Debug;
  return Level::Warn;
}

const char* level_tag(Level level) {
  switch (level) {
    case Level::Error: return "error";
    case Level::Warn: return "warn";
    case Level::Info: return "info";
    case Level::Debug: return "debug";
  }
  return "?";
}

}  // namespace

Level threshold() {
  static const Level value = parse_level(std::getenv("DIRGRAD_LOG"));
  return value;
}

bool enabled(Level level) { return static_cast<int>(level) <= static_cast<int>(threshold()); }

void write(Level level, const char* fmt, ...) {
  if (!enabled(level)) return;
  std::fprintf(stderr, "[dirgrad:%s] ", level_tag(level));
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
  std::fputc('\n', stderr);
}

}  // namespace dirgrad::log
