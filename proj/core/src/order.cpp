#include "cuspidal/order.hpp"

#include "cuspidal/errors.hpp"

namespace cuspidal {

Order::Order(const FieldDesc& field, std::int64_t f) : field_(field), f_(f) {
    if (f <= 0) throw UsageError("conductor f must be positive, got " + std::to_string(f));
}

Int Order::disc() const {
    Int f = conductor();
    return f * f * Int(static_cast<long>(field_.disc()));
}

Order Order::overorder(std::int64_t g) const {
    if (g <= 0 || f_ % g != 0)
        throw UsageError(std::to_string(g) + " does not divide the conductor " + std::to_string(f_));
    return Order(field_, g);
}

std::string Order::to_string() const {
    return "O_" + std::to_string(f_) + "(m=" + std::to_string(field_.m()) + ")";
}

}  // namespace cuspidal
