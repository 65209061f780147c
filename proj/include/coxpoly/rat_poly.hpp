#pragma once

#include "coxpoly/int_poly.hpp"

namespace coxpoly {

/// Dense univariate polynomial over exact rationals, ascending by power.
/// Same normalization contract as IntPoly; every coefficient is kept
/// canonical (positive denominator, lowest terms) by mpq_class.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    explicit RatPoly(const IntPoly& p);

    static RatPoly zero() { return RatPoly{}; }
    static RatPoly one();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const; // throws std::logic_error on the zero polynomial
    const Rat& leading() const;
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Scaled to leading coefficient 1. Throws on zero.
    RatPoly monic() const;

    /// Clears denominators and strips content; positive leading coefficient.
    IntPoly to_primitive_int() const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly operator-() const;
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rat& s, const RatPoly& p);

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

struct RatDivRem {
    RatPoly quot;
    RatPoly rem;
};

/// Euclidean division over Q; any nonzero divisor is accepted.
RatDivRem divrem(const RatPoly& p, const RatPoly& d);

Rat eval(const RatPoly& p, const Rat& x);

RatPoly derivative(const RatPoly& p);

} // namespace coxpoly
