#ifndef CUSPIDAL_TESTS_HELPERS_HPP_
#define CUSPIDAL_TESTS_HELPERS_HPP_

#include "cuspidal/quadideal.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace cuspidal;

inline QuadElt el(const FieldDesc& F, const std::string& s) { return parse_element(F, s); }

inline QIdeal ideal(const Order& R, const std::vector<std::string>& gens) {
    std::vector<QuadElt> v;
    for (const auto& g : gens) v.push_back(parse_element(R.field(), g));
    return QIdeal::from_generators(R, v);
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(20240917 + salt); }

// Small fields of both signs and both omega kinds.
inline const std::vector<std::int64_t>& test_fields() {
    static const std::vector<std::int64_t> ms{-1, -2, -3, -5, -7, -15, 2, 3, 5, 6, 13};
    return ms;
}

}  // namespace testing

#endif  // CUSPIDAL_TESTS_HELPERS_HPP_
