#include "coxpoly/int_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace coxpoly {

namespace {

const Int kZero = 0;

void check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int exact_div(const Int& a, const Int& b) {
    check(b != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()), "non-exact integer division");
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

IntPoly exact_div_scalar(const IntPoly& p, const Int& s) {
    std::vector<Int> c(p.coeffs());
    for (Int& x : c) x = exact_div(x, s);
    return IntPoly(std::move(c));
}

// Exact polynomial division by a (not necessarily monic) exact divisor.
IntPoly exact_div_poly(const IntPoly& p, const IntPoly& d) {
    if (p.is_zero()) return IntPoly::zero();
    check(!d.is_zero() && p.degree() >= d.degree(), "bad exact polynomial division");
    std::vector<Int> rem(p.coeffs());
    std::vector<Int> quot(p.degree() - d.degree() + 1);
    const Int& lead = d.leading();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Int q = exact_div(rem[k + d.degree()], lead);
        quot[k] = q;
        if (q != 0)
            for (int i = 0; i <= d.degree(); ++i)
                rem[k + i] -= q * d.coeff(i);
    }
    for (const Int& r : rem) check(r == 0, "non-exact polynomial division");
    return IntPoly(std::move(quot));
}

// Pseudo-remainder: lc(d)^(deg p - deg d + 1) * p = q*d + r.
IntPoly pseudo_rem(const IntPoly& p, const IntPoly& d) {
    IntPoly r = p;
    const Int& lead = d.leading();
    int steps = p.degree() - d.degree() + 1;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::vector<Int> next(r.coeffs());
        const Int top = r.leading();
        for (Int& x : next) x *= lead;
        int shift = r.degree() - d.degree();
        for (int i = 0; i <= d.degree(); ++i) next[shift + i] -= top * d.coeff(i);
        r = IntPoly(std::move(next));
        --steps;
    }
    if (steps > 0 && !r.is_zero()) r *= int_pow(lead, static_cast<unsigned long>(steps));
    return r;
}

IntPoly positive_primitive(const IntPoly& p) {
    IntPoly r = primitive_part(p);
    if (!r.is_zero() && sgn(r.leading()) < 0) return -r;
    return r;
}

} // namespace

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::variable() { return IntPoly{0, 1}; }

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, int power) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(power) + 1, Int(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

int IntPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
    return static_cast<int>(coeffs_.size()) - 1;
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly::zero();
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPoly& IntPoly::operator*=(const Int& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (Int& c : coeffs_) c *= s;
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (Int& c : r.coeffs_) c = -c;
    return r;
}

DivRem divrem(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero() || !d.is_monic()) throw std::invalid_argument("divisor must be monic nonzero");
    if (p.is_zero() || p.degree() < d.degree()) return {IntPoly::zero(), p};
    std::vector<Int> rem(p.coeffs());
    std::vector<Int> quot(p.degree() - d.degree() + 1);
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Int q = rem[k + d.degree()];
        quot[k] = q;
        if (q != 0)
            for (int i = 0; i <= d.degree(); ++i)
                rem[k + i] -= q * d.coeff(i);
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

bool divides_exactly(const IntPoly& d, const IntPoly& p) {
    return divrem(p, d).rem.is_zero();
}

IntPoly exact_quotient(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact quotient by the zero polynomial");
    if (p.is_zero()) return IntPoly::zero();
    return exact_div_poly(p, d);
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("pseudo-remainder by the zero polynomial");
    if (p.is_zero() || p.degree() < d.degree()) return p;
    return pseudo_rem(p, d);
}

Int content(const IntPoly& p) {
    Int c = 0;
    for (const Int& x : p.coeffs()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    return c;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    return exact_div_scalar(p, content(p));
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    if (p.is_zero()) return positive_primitive(q);
    if (q.is_zero()) return positive_primitive(p);

    IntPoly a = primitive_part(p);
    IntPoly b = primitive_part(q);
    if (a.degree() < b.degree()) std::swap(a, b);

    // Subresultant remainder sequence (Brown); stays in Z[T] throughout.
    Int g = 1, h = 1;
    while (!b.is_zero() && b.degree() > 0) {
        int delta = a.degree() - b.degree();
        IntPoly r = pseudo_rem(a, b);
        a = b;
        if (r.is_zero()) {
            b = IntPoly::zero();
            break;
        }
        b = exact_div_scalar(r, g * int_pow(h, static_cast<unsigned long>(delta)));
        g = a.leading();
        if (delta > 0)
            h = exact_div(int_pow(g, static_cast<unsigned long>(delta)),
                          int_pow(h, static_cast<unsigned long>(delta - 1)));
    }
    if (!b.is_zero()) return IntPoly::one(); // nonzero constant remainder: coprime
    return positive_primitive(a);
}

Rat eval(const IntPoly& p, const Rat& x) {
    Rat acc = 0;
    for (int i = static_cast<int>(p.coeffs().size()) - 1; i >= 0; --i) {
        acc *= x;
        acc += p.coeffs()[static_cast<size_t>(i)];
    }
    return acc;
}

Int eval(const IntPoly& p, const Int& x) {
    Int acc = 0;
    for (int i = static_cast<int>(p.coeffs().size()) - 1; i >= 0; --i) {
        acc *= x;
        acc += p.coeffs()[static_cast<size_t>(i)];
    }
    return acc;
}

int sign_at(const IntPoly& p, const Rat& x) {
    if (p.is_zero()) return 0;
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    // p(n/d) * d^deg = sum a_i n^i d^(deg-i), evaluated by Horner.
    Int acc = p.leading();
    Int dpow = 1;
    for (int i = p.degree() - 1; i >= 0; --i) {
        dpow *= den;
        acc *= num;
        acc += p.coeff(i) * dpow;
    }
    return sgn(acc);
}

IntPoly compose_t2(const IntPoly& p) {
    if (p.is_zero()) return p;
    std::vector<Int> out(2 * p.coeffs().size() - 1);
    for (size_t i = 0; i < p.coeffs().size(); ++i) out[2 * i] = p.coeffs()[i];
    return IntPoly(std::move(out));
}

IntPoly derivative(const IntPoly& p) {
    if (p.is_constant()) return IntPoly::zero();
    std::vector<Int> out(p.coeffs().size() - 1);
    for (size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = Int(static_cast<long>(i)) * p.coeffs()[i];
    return IntPoly(std::move(out));
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    IntPoly a = positive_primitive(p);
    if (a.degree() == 0) return a;
    IntPoly g = gcd(a, derivative(a));
    if (g.degree() == 0) return a;
    return positive_primitive(exact_div_poly(a, g));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly a = positive_primitive(p);
    if (a.degree() == 0) return out;

    // Yun's algorithm over Z; every division below is exact.
    IntPoly g = gcd(a, derivative(a));
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    IntPoly c = exact_div_poly(a, g);
    IntPoly d = exact_div_poly(derivative(a), g) - derivative(c);
    int mult = 1;
    while (!c.is_constant()) {
        IntPoly f = gcd(c, d);
        if (!f.is_constant()) out.emplace_back(f, mult);
        c = exact_div_poly(c, f);
        d = exact_div_poly(d, f) - derivative(c);
        ++mult;
    }
    return out;
}

std::string to_pretty_string(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& c = p.coeff(i);
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace coxpoly
