#ifndef CUSPIDAL_UNITS_HPP_
#define CUSPIDAL_UNITS_HPP_

#include "cuspidal/order.hpp"

#include <map>
#include <shared_mutex>
#include <vector>

namespace cuspidal {

struct UnitInfo {
    bool real = false;
    // Real case: the fundamental unit, > 1 under the embedding sqrt(m) > 0.
    // Imaginary case: a generator of the torsion group.
    QuadElt fundamental;
    std::vector<QuadElt> torsion;
    int torsion_order = 2;
    bool has_norm_minus_one = false;

    explicit UnitInfo(const FieldDesc& field) : fundamental(field) {}
};

// Fundamental unit of the maximal order of a real quadratic field, from the
// continued fraction of -conj(w).
QuadElt field_fundamental_unit(const FieldDesc& field);

UnitInfo fundamental_unit(const Order& order);

// [sup^x : sub^x]; sub.f must be a multiple of sup.f.
Int unit_index(const Order& sub, const Order& sup);

// Memo keyed by (m, f). Concurrent readers, one writer at a time.
class UnitCache {
public:
    static UnitCache& global();
    UnitInfo get(const Order& order);

private:
    std::shared_mutex mutex_;
    std::map<std::pair<std::int64_t, std::int64_t>, UnitInfo> table_;
};

}  // namespace cuspidal

#endif  // CUSPIDAL_UNITS_HPP_
