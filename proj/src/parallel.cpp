#include "sslab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace sslab {

int effective_threads(int requested) {
    int cap = 0;
    if (const char* env = std::getenv("SHELLSORT_LAB_THREADS")) {
        try {
            cap = std::stoi(env);
        } catch (...) {
            cap = 0;
        }
    }
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (cap > 0 && t > cap) t = cap;
    return t;
}

}  // namespace sslab
