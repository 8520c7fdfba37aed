#ifndef CUSPIDAL_ORDER_HPP_
#define CUSPIDAL_ORDER_HPP_

#include "cuspidal/lattice.hpp"

#include <cstdint>
#include <string>

namespace cuspidal {

// The order Z + Z*f*w of conductor f.
class Order {
public:
    Order(const FieldDesc& field, std::int64_t f);

    const FieldDesc& field() const { return field_; }
    std::int64_t f() const { return f_; }
    Int conductor() const { return Int(static_cast<long>(f_)); }
    bool is_maximal() const { return f_ == 1; }

    // f^2 * disc(K)
    Int disc() const;
    Lattice lattice() const { return Lattice::order(field_, conductor()); }
    bool contains(const QuadElt& x) const { return divides(conductor(), x.b()); }
    // f*w
    QuadElt generator() const { return QuadElt(field_, 0, conductor()); }
    // The order of conductor g, which must divide f.
    Order overorder(std::int64_t g) const;

    bool operator==(const Order& o) const { return field_ == o.field_ && f_ == o.f_; }
    bool operator!=(const Order& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldDesc field_;
    std::int64_t f_;
};

}  // namespace cuspidal

#endif  // CUSPIDAL_ORDER_HPP_
