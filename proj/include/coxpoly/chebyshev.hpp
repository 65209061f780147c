#pragma once

#include "coxpoly/int_poly.hpp"

namespace coxpoly {

/// Normalized Chebyshev polynomial of the second kind: u_0 = 1, u_1 = T,
/// u_{n+1} = T*u_n - u_{n-1}. Monic of degree n; coefficient parity
/// matches the parity of n. Throws for n < 0.
IntPoly chebyshev_u(int n);

/// Exact check of the identity v_{n+1}(T^2) = symmetrize(u_n).
bool verify_v_u_identity(int n);

} // namespace coxpoly
