#include "gl2/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace gl2 {

namespace {
std::atomic<unsigned> configured{1};
}

void set_default_workers(unsigned n) { configured = n == 0 ? 1 : n; }

unsigned default_workers() {
    if (const char* env = std::getenv("GL2_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return unsigned(v);
        } catch (const std::exception&) {
        }
    }
    return configured;
}

}  // namespace gl2
