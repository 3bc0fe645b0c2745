#include "amoeba/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace amoeba::log {

Level threshold() {
    static const Level level = [] {
        const char* env = std::getenv("AMOEBA_LOG");
        if (!env) return Level::warn;
        const std::string v(env);
        if (v == "error") return Level::error;
        if (v == "info") return Level::info;
        if (v == "debug") return Level::debug;
        return Level::warn;
    }();
    return level;
}

void write(Level level, std::string_view message) {
    if (static_cast<int>(level) > static_cast<int>(threshold())) return;
    static std::mutex mu;
    static constexpr const char* names[] = {"error", "warn", "info", "debug"};
    std::lock_guard lock(mu);
    std::cerr << "[amoeba " << names[static_cast<int>(level)] << "] " << message << '\n';
}

}  // namespace amoeba::log
