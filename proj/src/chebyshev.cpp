#include "coxpoly/chebyshev.hpp"

#include "coxpoly/cyclotomic.hpp"
#include "coxpoly/symmetry.hpp"

#include <stdexcept>

namespace coxpoly {

IntPoly chebyshev_u(int n) {
    if (n < 0) throw std::invalid_argument("chebyshev_u requires n >= 0");
    IntPoly prev = IntPoly::one();
    if (n == 0) return prev;
    IntPoly cur = IntPoly::variable();
    const IntPoly t = IntPoly::variable();
    for (int i = 1; i < n; ++i) {
        IntPoly next = t * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool verify_v_u_identity(int n) {
    if (n < 0) throw std::invalid_argument("identity check requires n >= 0");
    return compose_t2(v(n + 1)) == symmetrize(chebyshev_u(n));
}

} // namespace coxpoly
