#pragma once

#include <string>

namespace ucon {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

/// Read once from UB_LOG ("quiet", "info", "debug" or 0/1/2); defaults to quiet.
LogLevel log_level();
void set_log_level(LogLevel level);

void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace ucon
