#include "coxpoly/rat_poly.hpp"

#include <stdexcept>

namespace coxpoly {

namespace {
const Rat kZero = 0;
}

RatPoly::RatPoly(const IntPoly& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) coeffs_.emplace_back(c);
}

RatPoly RatPoly::one() {
    std::vector<Rat> c{Rat(1)};
    return RatPoly(std::move(c));
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int RatPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rat& RatPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Rat& RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw std::invalid_argument("cannot scale the zero polynomial to monic");
    Rat inv = 1 / leading();
    return inv * *this;
}

IntPoly RatPoly::to_primitive_int() const {
    if (is_zero()) return IntPoly::zero();
    Int common_den = 1;
    for (const Rat& c : coeffs_) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) {
        Rat scaled = c * Rat(common_den);
        out.push_back(scaled.get_num());
    }
    IntPoly p = primitive_part(IntPoly(std::move(out)));
    if (sgn(p.leading()) < 0) return -p;
    return p;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly::zero();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPoly(std::move(out));
}

RatPoly operator*(const Rat& s, const RatPoly& p) {
    if (s == 0) return RatPoly::zero();
    RatPoly r = p;
    for (Rat& c : r.coeffs_) c *= s;
    return r;
}

RatDivRem divrem(const RatPoly& p, const RatPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (p.is_zero() || p.degree() < d.degree()) return {RatPoly::zero(), p};
    std::vector<Rat> rem(p.coeffs());
    std::vector<Rat> quot(static_cast<size_t>(p.degree() - d.degree() + 1));
    const Rat& lead = d.leading();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Rat q = rem[static_cast<size_t>(k + d.degree())] / lead;
        quot[static_cast<size_t>(k)] = q;
        if (q != 0)
            for (int i = 0; i <= d.degree(); ++i)
                rem[static_cast<size_t>(k + i)] -= q * d.coeff(i);
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

Rat eval(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (int i = static_cast<int>(p.coeffs().size()) - 1; i >= 0; --i) {
        acc *= x;
        acc += p.coeffs()[static_cast<size_t>(i)];
    }
    return acc;
}

RatPoly derivative(const RatPoly& p) {
    if (p.is_zero() || p.degree() == 0) return RatPoly::zero();
    std::vector<Rat> out(p.coeffs().size() - 1);
    for (size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = Rat(static_cast<long>(i)) * p.coeffs()[i];
    return RatPoly(std::move(out));
}

} // namespace coxpoly
