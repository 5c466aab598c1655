#include "ginipca/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>

namespace ginipca::log {

namespace {

std::atomic<Level>& current() noexcept {
    static std::atomic<Level> lvl{[] {
        const char* env = std::getenv("GINI_PCA_LOG");
        return env ? parse_level(env, Level::error) : Level::error;
    }()};
    return lvl;
}

void emit(Level at, const char* tag, const std::string& msg) {
    if (static_cast<int>(at) > static_cast<int>(level())) return;
    static std::mutex mu;
    std::lock_guard lock(mu);
    std::cerr << "[gini_pca " << tag << "] " << msg << '\n';
}

}  // namespace

Level level() noexcept { return current().load(std::memory_order_relaxed); }
void set_level(Level l) noexcept { current().store(l, std::memory_order_relaxed); }

Level parse_level(const std::string& s, Level fallback) noexcept {
    if (s == "error") return Level::error;
    if (s == "info") return Level::info;
    if (s == "debug") return Level::debug;
    return fallback;
}

void error(const std::string& msg) { emit(Level::error, "error", msg); }
void warn(const std::string& msg) { emit(Level::info, "warn", msg); }
void info(const std::string& msg) { emit(Level::info, "info", msg); }
void debug(const std::string& msg) { emit(Level::debug, "debug", msg); }

}  // namespace ginipca::log
