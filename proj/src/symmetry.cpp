#include "coxpoly/symmetry.hpp"

#include <stdexcept>

namespace coxpoly {

bool is_self_reciprocal(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("self-reciprocity of the zero polynomial");
    int n = p.degree();
    for (int i = 0; 2 * i <= n; ++i)
        if (p.coeff(i) != p.coeff(n - i)) return false;
    return true;
}

IntPoly symmetrize(const IntPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("symmetrize of the zero polynomial");
    int k = q.degree();
    // q*(T) = sum_m c_m T^(k-m) (T^2+1)^m for q = sum c_m X^m.
    const IntPoly t2p1{1, 0, 1};
    IntPoly power = IntPoly::one();
    IntPoly acc;
    for (int m = 0; m <= k; ++m) {
        if (q.coeff(m) != 0) acc += IntPoly::monomial(q.coeff(m), k - m) * power;
        if (m < k) power *= t2p1;
    }
    return acc;
}

IntPoly desymmetrize(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("desymmetrize of the zero polynomial");
    if (!is_self_reciprocal(p)) throw std::invalid_argument("desymmetrize requires a self-reciprocal input");
    if (p.degree() % 2 != 0)
        throw std::invalid_argument("odd-degree self-reciprocal: factor out (T+1) first");
    int k = p.degree() / 2;

    // Peel coefficients from the top: the T^(k+m) coefficient of the
    // residual is contributed only by c_m T^(k-m)(T^2+1)^m.
    const IntPoly t2p1{1, 0, 1};
    std::vector<IntPoly> powers(static_cast<size_t>(k) + 1);
    powers[0] = IntPoly::one();
    for (int m = 1; m <= k; ++m) powers[static_cast<size_t>(m)] = powers[static_cast<size_t>(m - 1)] * t2p1;

    std::vector<Int> q_coeffs(static_cast<size_t>(k) + 1);
    IntPoly residual = p;
    for (int m = k; m >= 0; --m) {
        Int c = residual.coeff(k + m);
        q_coeffs[static_cast<size_t>(m)] = c;
        if (c != 0) residual -= IntPoly::monomial(c, k - m) * powers[static_cast<size_t>(m)];
    }
    if (!residual.is_zero()) throw std::logic_error("desymmetrize recurrence left a nonzero residual");
    return IntPoly(std::move(q_coeffs));
}

ParitySplit split_parity(const IntPoly& p) {
    if (p.is_zero() || !is_self_reciprocal(p))
        throw std::invalid_argument("split_parity requires a self-reciprocal input");
    ParitySplit out;
    out.epsilon = p.degree() % 2;
    IntPoly even = p;
    if (out.epsilon == 1) {
        DivRem dr = divrem(p, IntPoly{1, 1});
        if (!dr.rem.is_zero())
            throw std::logic_error("odd-degree self-reciprocal polynomial not divisible by T+1");
        even = dr.quot;
    }
    out.core = desymmetrize(even);
    return out;
}

IntPoly even_decompress(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("even_decompress of the zero polynomial");
    for (int i = 1; i <= f.degree(); i += 2)
        if (f.coeff(i) != 0) throw std::invalid_argument("input must lie in Z[T^2]");
    IntPoly star = symmetrize(f);
    // f in Z[T^2] forces f* in Z[T^2]; substitute T^2 -> T.
    std::vector<Int> out(static_cast<size_t>(star.degree() / 2) + 1);
    for (int i = 0; i <= star.degree(); ++i) {
        if (i % 2 != 0) {
            if (star.coeff(i) != 0) throw std::logic_error("symmetrization of an even polynomial has odd terms");
        } else {
            out[static_cast<size_t>(i / 2)] = star.coeff(i);
        }
    }
    return IntPoly(std::move(out));
}

} // namespace coxpoly
