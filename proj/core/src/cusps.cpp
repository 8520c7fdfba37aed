#include "cuspidal/cusps.hpp"

#include "cuspidal/errors.hpp"
#include "cuspidal/invariants.hpp"
#include "cuspidal/units.hpp"

namespace cuspidal {

CuspReport cusp_count(const Order& order, const SearchConfig& cfg, const PicFn& pic) {
    CuspReport report{order.field().m(), order.f(), 0, {}};
    for (std::int64_t fp : divisors(order.f())) {
        const Order sub = order.overorder(fp);
        const std::int64_t n0 = order.f() / fp;
        CuspRow row{fp, Int(static_cast<long>(euler_phi(n0))), 0, 0, 0};
        row.eps = UnitCache::global().get(sub).has_norm_minus_one && n0 > 2 ? 1 : 0;
        row.pic = pic ? pic(sub, cfg).h : picard_order(sub, cfg).h;
        const Int num = row.phi * row.pic;
        CUSPIDAL_CHECK(row.eps == 0 || divides(Int(2), num), "cusp contribution is not an integer");
        row.contribution = row.eps ? Int(num / 2) : num;
        report.total += row.contribution;
        report.rows.push_back(row);
    }
    return report;
}

Int cusp_count_direct(const Order& order, const SearchConfig& cfg) {
    Int total = 0;
    for (const QIdeal& I : enumerate_ideal_classes(order, cfg)) {
        const Int n0 = Int(static_cast<long>(order.f() / multiplier_conductor(I)));
        const Int units = Int(static_cast<long>(unit_residues(n0).size()));
        const Int eps = Int(static_cast<long>(epsilon_subgroup(I).size()));
        CUSPIDAL_CHECK(divides(eps, units), "eps(I) is not a subgroup of (R/Fitt_1(I))^x");
        total += units / eps;
    }
    return total;
}

}  // namespace cuspidal
