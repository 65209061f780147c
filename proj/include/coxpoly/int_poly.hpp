#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace coxpoly {

using Int = mpz_class;

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored ascending by power: coeff(i) is the coefficient
/// of T^i. The representation is always normalized (no trailing zeros); the
/// zero polynomial is the empty coefficient vector and has no degree --
/// degree() throws on it rather than returning a sentinel integer.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return constant(1); }
    static IntPoly variable();                 // T
    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, int power); // c*T^power

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const; // throws std::logic_error on the zero polynomial
    const Int& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of T^i; zero outside the stored range.
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Int& s);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& s, IntPoly p) { return p *= s; }
    friend IntPoly operator*(IntPoly p, const Int& s) { return p *= s; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

private:
    void normalize();
    std::vector<Int> coeffs_;
};

struct DivRem {
    IntPoly quot;
    IntPoly rem;
};

/// Euclidean division p = d*quot + rem with deg rem < deg d.
/// The divisor must be monic and nonzero so that quotient and remainder
/// stay integral; anything else throws std::invalid_argument.
DivRem divrem(const IntPoly& p, const IntPoly& d);

/// True iff d is monic and divides p exactly.
bool divides_exactly(const IntPoly& d, const IntPoly& p);

/// Quotient p/d for an exact (not necessarily monic) divisor; throws
/// std::logic_error if the division is not exact over Z.
IntPoly exact_quotient(const IntPoly& p, const IntPoly& d);

/// Pseudo-remainder r with lc(d)^(deg p - deg d + 1) * p = q*d + r.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& d);

/// Primitive gcd with positive leading coefficient, computed by a
/// fraction-free subresultant remainder sequence. Throws if both inputs
/// are zero.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

/// Content of p: the (non-negative) gcd of its coefficients; 0 for the
/// zero polynomial.
Int content(const IntPoly& p);

/// p divided by its content. Keeps the sign of the leading coefficient.
IntPoly primitive_part(const IntPoly& p);

using Rat = mpq_class;

/// Exact evaluation at a rational point (Horner).
Rat eval(const IntPoly& p, const Rat& x);

/// Exact evaluation at an integer point.
Int eval(const IntPoly& p, const Int& x);

/// Sign of p(x) at a rational point, computed with integer arithmetic
/// only (homogenized Horner). Returns -1, 0 or +1.
int sign_at(const IntPoly& p, const Rat& x);

/// p(T^2): coefficient of T^{2i} is coeff(i), odd coefficients zero.
IntPoly compose_t2(const IntPoly& p);

IntPoly derivative(const IntPoly& p);

/// p / gcd(p, p'), primitive with positive leading coefficient.
/// Throws on zero input.
IntPoly squarefree_part(const IntPoly& p);

/// Yun decomposition [(f_1, 1), (f_2, 2), ...] with each f_k squarefree,
/// pairwise coprime, and prod f_k^k = p up to sign and content. Factors of
/// degree zero are dropped. Throws on zero input.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

/// Human-readable form like "T^3 - 2*T". Output only, never parsed.
std::string to_pretty_string(const IntPoly& p, const std::string& var = "T");

} // namespace coxpoly
