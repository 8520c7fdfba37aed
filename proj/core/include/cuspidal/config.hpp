#ifndef CUSPIDAL_CONFIG_HPP_
#define CUSPIDAL_CONFIG_HPP_

#include "cuspidal/bigint.hpp"

namespace cuspidal {

// Desk-scale limits. Exceeding one raises Inconclusive.
struct SearchConfig {
    // Largest |disc| of an order whose ideal classes are enumerated.
    Int disc_bound = 20000;
    // Largest number of candidate coordinates tried in one principality test.
    Int search_bound = 50'000'000;
    // Largest conductor accepted by exhaustive finite-quotient unit counts.
    std::int64_t conductor_cap = 64;

    // Defaults, with disc_bound overridden by $CUSPIDAL_BOUND when set.
    static SearchConfig from_env();
};

}  // namespace cuspidal

#endif  // CUSPIDAL_CONFIG_HPP_
