#include "duadic/parallel.hpp"

#include <cstdlib>
#include <string>

namespace duadic {

unsigned worker_count() {
    if (const char* env = std::getenv("DUADIC_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace duadic
