#ifndef CUSPIDAL_CUSPS_HPP_
#define CUSPIDAL_CUSPS_HPP_

#include "cuspidal/classnum.hpp"

#include <functional>
#include <vector>

namespace cuspidal {

struct CuspRow {
    std::int64_t f_prime;
    Int phi;  // phi(f/f')
    int eps;  // 1 iff O_f' has a unit of norm -1 and f/f' > 2
    Int pic;  // |Pic(O_f')|
    Int contribution;
};

struct CuspReport {
    std::int64_t m;
    std::int64_t f;
    Int total;
    std::vector<CuspRow> rows;
};

using PicFn = std::function<PicSize(const Order&, const SearchConfig&)>;

// sum over f' | f of phi(f/f') |Pic(O_f')| / 2^eps(f, f'). The Picard sizes
// come from pic (picard_order unless overridden).
CuspReport cusp_count(const Order& order, const SearchConfig& cfg = {}, const PicFn& pic = {});

// sum over ideal classes [I] of [(Z/(f/f'))^x : eps(I)].
Int cusp_count_direct(const Order& order, const SearchConfig& cfg = {});

}  // namespace cuspidal

#endif  // CUSPIDAL_CUSPS_HPP_
