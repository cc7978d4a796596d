#ifndef SCROLLSMITH_PARALLEL_HPP
#define SCROLLSMITH_PARALLEL_HPP

#include <cstdlib>
#include <thread>

namespace scrollsmith {

/// Worker cap for internal parallelism: SCROLLSMITH_THREADS when set to a
/// positive integer, otherwise the hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("SCROLLSMITH_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace scrollsmith

#endif
