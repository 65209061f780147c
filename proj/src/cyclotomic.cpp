#include "coxpoly/cyclotomic.hpp"

#include "coxpoly/chebyshev.hpp"
#include "coxpoly/symmetry.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace coxpoly {

long euler_totient(long n) {
    if (n < 1) throw std::invalid_argument("totient requires n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPoly v(long n) {
    if (n < 1) throw std::invalid_argument("v_n requires n >= 1");
    return IntPoly(std::vector<Int>(static_cast<size_t>(n), Int(1)));
}

IntPoly cyclo(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");

    static std::mutex cache_mutex;
    static std::map<long, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    IntPoly result;
    if (n == 1) {
        result = IntPoly{-1, 1};
    } else {
        result = v(n);
        for (long d = 2; d * d <= n; ++d) {
            if (n % d != 0) continue;
            if (d < n) {
                DivRem dr = divrem(result, cyclo(d));
                if (!dr.rem.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
                result = dr.quot;
            }
            long e = n / d;
            if (e != d && e > 1 && e < n) {
                DivRem dr = divrem(result, cyclo(e));
                if (!dr.rem.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
                result = dr.quot;
            }
        }
    }

    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(n, result);
    return result;
}

CyclotomicPart extract_cyclotomic_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cyclotomic extraction of the zero polynomial");
    CyclotomicPart out;
    out.remainder = p;
    if (p.is_constant()) return out;

    // totient(n) >= sqrt(n/2), so every n with totient(n) <= deg p
    // satisfies n <= 2*(deg p)^2.
    long deg = p.degree();
    long bound = 2 * deg * deg;
    for (long n = 1; n <= bound; ++n) {
        if (out.remainder.is_constant()) break;
        if (euler_totient(n) > out.remainder.degree()) continue;
        IntPoly phi = cyclo(n);
        while (!out.remainder.is_constant() && out.remainder.degree() >= phi.degree()) {
            DivRem dr = divrem(out.remainder, phi);
            if (!dr.rem.is_zero()) break;
            out.remainder = dr.quot;
            out.indices.push_back(n);
        }
    }
    return out;
}

bool is_cyclotomic_product(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("cyclotomic-product test requires a monic polynomial");
    return extract_cyclotomic_part(p).remainder == IntPoly::one();
}

IntPoly representing_factor(long n) {
    if (n <= 1) throw std::invalid_argument("phi_1 = T - 1 is not representable");
    IntPoly f = desymmetrize(compose_t2(cyclo(n)));
    if (!divides_exactly(f, chebyshev_u(static_cast<int>(n) - 1)))
        throw std::logic_error("representing factor does not divide u_{n-1}");
    return f;
}

IntPoly represent_unit_disk(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("representation requires a monic polynomial");
    CyclotomicPart part = extract_cyclotomic_part(p);
    if (part.remainder != IntPoly::one())
        throw std::invalid_argument("hypotheses of the unit-disk theorem violated (roots leave the unit disk)");
    IntPoly q = IntPoly::one();
    for (long n : part.indices) {
        if (n == 1) throw std::invalid_argument("root 1 excluded by theorem");
        q *= representing_factor(n);
    }
    return q;
}

std::vector<SrFactor> sr_decompose_cyclotomic(const IntPoly& p) {
    if (p.is_zero() || !is_self_reciprocal(p))
        throw std::invalid_argument("sr-decomposition requires a self-reciprocal input");
    if (!p.is_monic())
        throw std::invalid_argument("sr-decomposition requires a monic input");

    CyclotomicPart part = extract_cyclotomic_part(p);
    long ones = 0;
    std::vector<long> rest;
    for (long n : part.indices) {
        if (n == 1)
            ++ones;
        else
            rest.push_back(n);
    }
    // Root 1 of a self-reciprocal polynomial has even multiplicity.
    if (ones % 2 != 0) throw std::logic_error("odd multiplicity of T-1 in a self-reciprocal polynomial");

    std::vector<SrFactor> out;
    IntPoly t_minus_1_sq = IntPoly{-1, 1} * IntPoly{-1, 1};
    for (long i = 0; i < ones / 2; ++i)
        out.push_back({SrFactor::Kind::UnitRootSquare, t_minus_1_sq, 1});
    for (long n : rest) out.push_back({SrFactor::Kind::Cyclotomic, cyclo(n), n});
    if (part.remainder != IntPoly::one())
        out.push_back({SrFactor::Kind::Remainder, part.remainder, 0});
    return out;
}

} // namespace coxpoly
