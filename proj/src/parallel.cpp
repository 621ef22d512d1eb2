#include "cyclocode/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace cyclocode {

unsigned resolve_thread_count(unsigned requested) noexcept {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CYCLOCODE_THREADS")) {
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
        if (ec == std::errc{} && *ptr == '\0' && value > 0) return value;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace cyclocode
