#include "acdual/exec.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace acdual {

namespace {

// ACD_THREADS: 0 or unset = all cores, otherwise a fixed thread count.
int env_threads() {
    static const int cached = [] {
        const char* raw = std::getenv("ACD_THREADS");
        if (raw == nullptr) return 0;
        try {
            const int v = std::stoi(raw);
            return v > 0 ? v : 0;
        } catch (...) {
            return 0;
        }
    }();
    return cached;
}

}  // namespace

int resolve_threads(const ExecPolicy& policy) {
    if (policy.threads > 0) return policy.threads;
    const int env = env_threads();
    if (env > 0) return env;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace acdual
