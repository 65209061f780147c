#pragma once

#include "coxpoly/int_poly.hpp"

namespace coxpoly {

/// Kronecker decomposition of a polynomial: the multiset of cyclotomic
/// indices n (one entry per phi_n factor) and the non-cyclotomic cofactor.
/// The product of the phi_n over `indices` times `remainder` equals the
/// source polynomial exactly, and the remainder admits no further phi_n
/// with totient(n) <= deg(remainder).
struct CyclotomicPart {
    std::vector<long> indices; // sorted ascending, repeats allowed
    IntPoly remainder;
};

long euler_totient(long n);

/// The n-th cyclotomic polynomial phi_n, monic of degree totient(n);
/// phi_1 = T-1, and for n > 1 phi_n = v_n / prod of proper-divisor
/// cyclotomics. Results are memoized behind a mutex. Throws for n < 1.
IntPoly cyclo(long n);

/// v_n = (T^n - 1)/(T - 1) = T^{n-1} + ... + T + 1. Throws for n < 1.
IntPoly v(long n);

/// Trial exact division by every phi_n with totient(n) <= deg p,
/// repeated to multiplicity. Throws on zero input.
CyclotomicPart extract_cyclotomic_part(const IntPoly& p);

/// True iff p is exactly a product of cyclotomic polynomials, which by
/// Kronecker's theorem decides whether all roots of the monic p lie in
/// the closed unit disk. Throws on non-monic input.
bool is_cyclotomic_product(const IntPoly& p);

/// The unique monic f_n with symmetrize(f_n) = phi_n(T^2); it divides
/// the Chebyshev polynomial u_{n-1} exactly (verified internally).
/// Throws for n <= 1: phi_1 = T-1 is not representable.
IntPoly representing_factor(long n);

/// For a monic product p of cyclotomics phi_n with n >= 2, returns q with
/// p(T^2) = symmetrize(q), as the product of the representing factors.
/// Throws if p is not a cyclotomic product or has the root 1.
IntPoly represent_unit_disk(const IntPoly& p);

/// One factor of a decomposition into irreducibles of the semigroup of
/// self-reciprocal polynomials, as far as cyclotomic extraction reaches.
struct SrFactor {
    enum class Kind {
        Cyclotomic,   // phi_n for n >= 2
        UnitRootSquare, // a (T-1)^2 block
        Remainder     // non-cyclotomic cofactor, returned unfactored
    };
    Kind kind;
    IntPoly poly;
    long index = 0; // n for Kind::Cyclotomic
};

/// Decomposes a monic self-reciprocal polynomial into cyclotomic factors
/// phi_n (n >= 2), (T-1)^2 blocks, and at most one atomic non-cyclotomic
/// remainder. Throws if p is not self-reciprocal or not monic.
std::vector<SrFactor> sr_decompose_cyclotomic(const IntPoly& p);

} // namespace coxpoly
