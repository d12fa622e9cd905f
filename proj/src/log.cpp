#include "rlab/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>

namespace rlab {

namespace {

LogLevel parse_level(const char* raw) {
  if (raw == nullptr) return LogLevel::warn;
  const std::string s(raw);
  if (s == "quiet" || s == "0") return LogLevel::quiet;
  if (s == "error" || s == "1") return LogLevel::error;
  if (s == "warn" || s == "2") return LogLevel::warn;
  if (s == "info" || s == "3") return LogLevel::info;
  if (s == "debug" || s == "4") return LogLevel::debug;
  return LogLevel::warn;
}

std::atomic<int>& level_slot() {
  static std::atomic<int> slot{int(parse_level(std::getenv("RESULTANT_LAB_LOG")))};
  return slot;
}

const char* tag(LogLevel level) {
  switch (level) {
    case LogLevel::error: return "error";
    case LogLevel::warn: return "warn";
    case LogLevel::info: return "info";
    case LogLevel::debug: return "debug";
    default: return "";
  }
}

}  // namespace

LogLevel log_level() { return LogLevel(level_slot().load()); }

void set_log_level(LogLevel level) { level_slot().store(int(level)); }

void log_message(LogLevel level, std::string_view text) {
  if (level == LogLevel::quiet || int(level) > level_slot().load()) return;
  std::cerr << "[resultant-lab " << tag(level) << "] " << text << '\n';
}

}  // namespace rlab
