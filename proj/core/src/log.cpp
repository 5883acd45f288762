#include "fracburgers/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace fracburgers {
namespace {

std::atomic<LogLevel> g_level{LogLevel::kWarning};
std::mutex g_sink_mutex;

constexpr std::string_view label(LogLevel level) {
  switch (level) {
    case LogLevel::kDebug:
      return "debug";
    case LogLevel::kInfo:
      return "info";
    case LogLevel::kWarning:
      return "warning";
    case LogLevel::kSilent:
      break;
  }
  return "";
}

}  // namespace

void set_log_level(LogLevel level) { g_level.store(level); }

LogLevel log_level() { return g_level.load(); }

void log_message(LogLevel level, std::string_view message) {
  if (level < g_level.load() || level == LogLevel::kSilent) return;
  std::lock_guard lock(g_sink_mutex);
  std::clog << "[fracburgers " << label(level) << "] " << message << '\n';
}

}  // namespace fracburgers
