#pragma once

#include "coxpoly/int_poly.hpp"

namespace coxpoly {

/// Decomposition p = (T+1)^epsilon * symmetrize(core) of a self-reciprocal
/// polynomial, where epsilon is the parity of deg p.
struct ParitySplit {
    int epsilon = 0; // 0 or 1
    IntPoly core;
};

/// True iff the coefficient sequence of p is a palindrome, equivalently
/// p(T) = T^{deg p} * p(1/T). Throws on zero input.
bool is_self_reciprocal(const IntPoly& p);

/// q* = T^{deg q} * q(T + 1/T); self-reciprocal of degree 2*deg q.
/// Multiplicative: (p*q)^* = p^* q^*. Throws on zero input.
IntPoly symmetrize(const IntPoly& q);

/// Inverse of symmetrize on self-reciprocal polynomials of even degree.
/// The coefficients are produced by a triangular recurrence from the top
/// down, so no division is ever performed. Throws on odd degree or on a
/// non-self-reciprocal input.
IntPoly desymmetrize(const IntPoly& p);

/// Splits a self-reciprocal p as (T+1)^epsilon * core^* with
/// epsilon = deg p mod 2. For odd degree the (T+1) factor is divided out
/// exactly first.
ParitySplit split_parity(const IntPoly& p);

/// The hat map on Z[T^2]: for f with only even-power terms, returns the
/// polynomial f_hat with f_hat(T^2) = f*(T). Multiplicative on Z[T^2]\{0}.
/// Throws if f has a nonzero odd-power coefficient.
IntPoly even_decompress(const IntPoly& f);

} // namespace coxpoly
