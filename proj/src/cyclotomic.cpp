#include "artal/cyclotomic.hpp"

#include <stdexcept>

namespace artal {

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(omega)");
    Rational n = norm();
    Cyclotomic c = conjugate();
    return {c.a_ / n, c.b_ / n};
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
    Rational ac = a_ * o.a_;
    Rational bd = b_ * o.b_;
    Rational mixed = a_ * o.b_ + b_ * o.a_;
    a_ = ac - bd;
    b_ = mixed - bd;
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    return *this *= o.inverse();
}

std::string Cyclotomic::to_string() const {
    if (b_ == 0) return format_rational(a_);
    std::string omega_term;
    if (b_ == 1)
        omega_term = "w";
    else if (b_ == -1)
        omega_term = "-w";
    else
        omega_term = format_rational(b_) + "*w";
    if (a_ == 0) return omega_term;
    if (b_ > 0) return format_rational(a_) + "+" + omega_term;
    return format_rational(a_) + omega_term;  // omega_term carries the minus sign
}

bool repr_less(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.rational_part() != y.rational_part()) return x.rational_part() < y.rational_part();
    return x.omega_part() < y.omega_part();
}

}  // namespace artal
