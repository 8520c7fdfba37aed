#include "cuspidal/config.hpp"

#include "cuspidal/errors.hpp"

#include <cstdlib>
#include <string>

namespace cuspidal {

SearchConfig SearchConfig::from_env() {
    SearchConfig cfg;
    if (const char* v = std::getenv("CUSPIDAL_BOUND"); v != nullptr && *v != '\0') {
        Int bound;
        if (bound.set_str(v, 10) != 0 || bound <= 0)
            throw UsageError(std::string("CUSPIDAL_BOUND is not a positive integer: ") + v);
        cfg.disc_bound = bound;
    }
    return cfg;
}

}  // namespace cuspidal
