#pragma once

#include <string_view>

namespace rlab {

enum class LogLevel { quiet = 0, error = 1, warn = 2, info = 3, debug = 4 };

/// Level from RESULTANT_LAB_LOG (a name or 0-4), read once; default warn.
LogLevel log_level();
void set_log_level(LogLevel level);

void log_message(LogLevel level, std::string_view text);
inline void log_warn(std::string_view text) { log_message(LogLevel::warn, text); }
inline void log_info(std::string_view text) { log_message(LogLevel::info, text); }
inline void log_debug(std::string_view text) { log_message(LogLevel::debug, text); }

}  // namespace rlab
