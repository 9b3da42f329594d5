#pragma once

#include <string>

#include "artal/rational.hpp"

namespace artal {

/// An element a + b*omega of Q(omega), omega a primitive cube root of unity,
/// so omega^2 = -1 - omega.  All arithmetic is exact.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(int value) : a_(value) {}  // NOLINT: implicit by design
    Cyclotomic(Rational value) : a_(std::move(value)) {}
    Cyclotomic(Rational rational_part, Rational omega_part)
        : a_(std::move(rational_part)), b_(std::move(omega_part)) {}

    static Cyclotomic omega() { return {0, 1}; }

    const Rational& rational_part() const { return a_; }
    const Rational& omega_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// The nontrivial field automorphism omega -> omega^2.
    Cyclotomic conjugate() const { return {a_ - b_, -b_}; }

    /// Field norm z * conjugate(z) = a^2 - a*b + b^2; zero only at zero.
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    Cyclotomic inverse() const;  // throws std::domain_error on zero

    Cyclotomic operator-() const { return {-a_, -b_}; }
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic l, const Cyclotomic& r) { return l += r; }
    friend Cyclotomic operator-(Cyclotomic l, const Cyclotomic& r) { return l -= r; }
    friend Cyclotomic operator*(Cyclotomic l, const Cyclotomic& r) { return l *= r; }
    friend Cyclotomic operator/(Cyclotomic l, const Cyclotomic& r) { return l /= r; }
    friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

    /// Human-readable form: "0", "-1/2", "w", "1-2/3*w", ...
    std::string to_string() const;

private:
    Rational a_;  // rational part
    Rational b_;  // omega part
};

/// Deterministic representation order (rational part, then omega part);
/// not a field order, used only for canonical sorting and map keys.
bool repr_less(const Cyclotomic& x, const Cyclotomic& y);

}  // namespace artal
