#include "ucon/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>

namespace ucon {

namespace {

LogLevel parse_env() {
  const char* v = std::getenv("UB_LOG");
  if (!v) return LogLevel::Quiet;
  const std::string s(v);
  if (s == "debug" || s == "2") return LogLevel::Debug;
  if (s == "info" || s == "1") return LogLevel::Info;
  return LogLevel::Quiet;
}

std::atomic<int>& level_slot() {
  static std::atomic<int> level{static_cast<int>(parse_env())};
  return level;
}

void emit(const char* tag, const std::string& msg) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "[" << tag << "] " << msg << '\n';
}

}  // namespace

LogLevel log_level() { return static_cast<LogLevel>(level_slot().load()); }
void set_log_level(LogLevel level) { level_slot().store(static_cast<int>(level)); }

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) emit("info", msg);
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::Debug) emit("debug", msg);
}

}  // namespace ucon
