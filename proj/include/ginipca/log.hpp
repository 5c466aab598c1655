#pragma once

#include <string>

// Minimal stderr logger; level comes from GINI_PCA_LOG (error, info, debug).

namespace ginipca::log {

enum class Level { error = 0, info = 1, debug = 2 };

Level level() noexcept;
void set_level(Level l) noexcept;

/// Parses "error", "info", "debug"; anything else yields `fallback`.
Level parse_level(const std::string& s, Level fallback) noexcept;

void error(const std::string& msg);
/// Warnings print at info level and above.
void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace ginipca::log
