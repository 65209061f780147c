#include "coxpoly/spectra.hpp"

#include "coxpoly/cyclotomic.hpp"
#include "coxpoly/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace coxpoly {

namespace {

Rat cauchy_bound(const IntPoly& p) {
    // Every root has |root| < 1 + max|a_i| / |lc|.
    Rat max_ratio = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rat r(abs(p.coeff(i)), abs(p.leading()));
        r.canonicalize();
        if (r > max_ratio) max_ratio = r;
    }
    return max_ratio + 1;
}

} // namespace

SturmChain sturm_chain(const IntPoly& p) {
    if (p.is_zero() || p.is_constant())
        throw std::invalid_argument("Sturm chain requires a polynomial of degree >= 1");
    SturmChain c;
    c.chain.push_back(squarefree_part(p));
    c.chain.push_back(derivative(c.chain.front()));
    while (!c.chain.back().is_constant()) {
        const IntPoly& a = c.chain[c.chain.size() - 2];
        const IntPoly& b = c.chain.back();
        int delta = a.degree() - b.degree();
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) throw std::logic_error("Sturm chain of a squarefree polynomial ended in zero");
        // The pseudo-remainder equals lc(b)^(delta+1) times the true
        // remainder; flip the sign unless that factor is negative.
        bool negative_factor = sgn(b.leading()) < 0 && (delta + 1) % 2 == 1;
        IntPoly next = primitive_part(r);
        if (!negative_factor) next = -next;
        c.chain.push_back(std::move(next));
    }
    return c;
}

int sign_near(const IntPoly& p, const Rat& x, int side) {
    if (p.is_zero()) return 0;
    int s = sign_at(p, x);
    if (s != 0 || side == 0) return s;
    IntPoly d = derivative(p);
    int order = 1;
    while (!d.is_zero()) {
        int sd = sign_at(d, x);
        if (sd != 0) return (side < 0 && order % 2 == 1) ? -sd : sd;
        d = derivative(d);
        ++order;
    }
    return 0;
}

int variations(const SturmChain& c, const Rat& x, int side) {
    int count = 0, last = 0;
    for (const IntPoly& f : c.chain) {
        int s = sign_near(f, x, side);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int variations_at_infinity(const SturmChain& c, int sign_of_infinity) {
    int count = 0, last = 0;
    for (const IntPoly& f : c.chain) {
        int s = sgn(f.leading());
        if (sign_of_infinity < 0 && f.degree() % 2 == 1) s = -s;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

long count_real_roots(const IntPoly& p, const Rat& a, const Rat& b, bool with_multiplicity) {
    if (a > b) throw std::invalid_argument("interval endpoints out of order");
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (p.is_constant()) return 0;
    if (with_multiplicity) {
        long total = 0;
        for (const auto& [factor, mult] : squarefree_decomposition(p))
            total += mult * count_real_roots(factor, a, b, false);
        return total;
    }
    SturmChain c = sturm_chain(p);
    return variations(c, a, -1) - variations(c, b, +1);
}

long count_real_roots_total(const IntPoly& p, bool with_multiplicity) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (p.is_constant()) return 0;
    if (with_multiplicity) {
        long total = 0;
        for (const auto& [factor, mult] : squarefree_decomposition(p))
            total += mult * count_real_roots_total(factor, false);
        return total;
    }
    SturmChain c = sturm_chain(p);
    return variations_at_infinity(c, -1) - variations_at_infinity(c, +1);
}

long count_roots_between(const SturmChain& c, const Rat& a, const Rat& b) {
    return variations(c, a, +1) - variations(c, b, +1);
}

namespace {

void split_into_isolating(const SturmChain& c, const Rat& lo, const Rat& hi, long count, const Rat& width_cap,
                          std::vector<std::pair<Rat, Rat>>& out) {
    if (count == 0) return;
    if (count == 1) {
        Rat a = lo, b = hi;
        if (width_cap > 0)
            while (b - a > width_cap) {
                Rat mid = (a + b) / 2;
                if (count_roots_between(c, a, mid) == 1)
                    b = mid;
                else
                    a = mid;
            }
        out.emplace_back(a, b);
        return;
    }
    Rat mid = (lo + hi) / 2;
    long left = count_roots_between(c, lo, mid);
    split_into_isolating(c, lo, mid, left, width_cap, out);
    split_into_isolating(c, mid, hi, count - left, width_cap, out);
}

} // namespace

std::vector<std::pair<Rat, Rat>> isolating_intervals(const SturmChain& c, const Rat& width_cap) {
    long total = variations_at_infinity(c, -1) - variations_at_infinity(c, +1);
    std::vector<std::pair<Rat, Rat>> out;
    if (total == 0) return out;
    Rat bound = cauchy_bound(c.chain.front());
    split_into_isolating(c, -bound, bound, total, width_cap, out);
    return out;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of the zero polynomial");
    if (p.is_constant()) return {};
    if (!gcd(p, derivative(p)).is_constant()) throw std::invalid_argument("non-squarefree input");
    SturmChain c = sturm_chain(p);
    return isolating_intervals(c, Rat(1, 1 << 20));
}

namespace {

struct RootRecord {
    Rat lo, hi; // root lies in (lo, hi]
    const SturmChain* chain;
    bool upper;
    bool lower;
};

void narrow(RootRecord& r) {
    Rat mid = (r.lo + r.hi) / 2;
    if (count_roots_between(*r.chain, r.lo, mid) == 1)
        r.hi = mid;
    else
        r.lo = mid;
}

} // namespace

bool interlacing_check(const IntPoly& q_lower, const IntPoly& q_upper) {
    if (q_lower.is_zero() || q_upper.is_zero())
        throw std::invalid_argument("interlacing requires nonzero polynomials");

    IntPoly sf_lower = squarefree_part(q_lower);
    IntPoly sf_upper = squarefree_part(q_upper);

    std::deque<SturmChain> chains;
    std::vector<RootRecord> recs;
    auto add_roots = [&](const IntPoly& f, bool upper, bool lower) {
        if (f.is_constant()) return;
        chains.push_back(sturm_chain(f));
        const SturmChain* chain = &chains.back();
        for (const auto& iv : isolate_real_roots(f)) recs.push_back({iv.first, iv.second, chain, upper, lower});
    };

    // Split off shared roots so all three root sets are pairwise disjoint
    // and interval refinement terminates.
    if (!sf_lower.is_constant() && !sf_upper.is_constant()) {
        IntPoly shared = gcd(sf_lower, sf_upper);
        if (!shared.is_constant()) {
            add_roots(shared, true, true);
            add_roots(exact_quotient(sf_upper, shared), true, false);
            add_roots(exact_quotient(sf_lower, shared), false, true);
        } else {
            add_roots(sf_upper, true, false);
            add_roots(sf_lower, false, true);
        }
    } else {
        add_roots(sf_upper, true, false);
        add_roots(sf_lower, false, true);
    }

    bool overlapping = true;
    while (overlapping) {
        overlapping = false;
        for (size_t i = 0; i < recs.size(); ++i)
            for (size_t j = i + 1; j < recs.size(); ++j) {
                if (recs[i].chain == recs[j].chain) continue;
                if (recs[i].hi <= recs[j].lo || recs[j].hi <= recs[i].lo) continue;
                narrow(recs[i]);
                narrow(recs[j]);
                overlapping = true;
            }
    }
    std::sort(recs.begin(), recs.end(), [](const RootRecord& a, const RootRecord& b) { return a.lo < b.lo; });

    std::vector<size_t> upper_positions;
    for (size_t i = 0; i < recs.size(); ++i)
        if (recs[i].upper) upper_positions.push_back(i);

    // Weak interlacing: each pair of consecutive upper roots must enclose
    // a lower root, endpoints included (a shared root qualifies).
    for (size_t k = 0; k + 1 < upper_positions.size(); ++k) {
        bool found = false;
        for (size_t i = upper_positions[k]; i <= upper_positions[k + 1]; ++i)
            if (recs[i].lower) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

namespace {

struct SplitCensus {
    int degree;
    int epsilon;
    IntPoly core;
    long on_circle;
    long off_circle;
};

SplitCensus census_with_core(const IntPoly& p) {
    if (!is_self_reciprocal(p)) throw std::invalid_argument("census requires a self-reciprocal polynomial");
    SplitCensus out;
    out.degree = p.is_constant() ? 0 : p.degree();
    ParitySplit ps = split_parity(p);
    out.epsilon = ps.epsilon;
    out.core = ps.core;
    long in_band = out.core.is_constant() ? 0 : count_real_roots(out.core, Rat(-2), Rat(2), true);
    // Each core root in [-2,2] lifts to a conjugate pair on the circle.
    out.on_circle = out.epsilon + 2 * in_band;
    out.off_circle = out.degree - out.on_circle;
    return out;
}

std::pair<Rat, Rat> abs_interval(const std::pair<Rat, Rat>& iv) {
    if (iv.first >= 0) return iv;
    if (iv.second <= 0) return {-iv.second, -iv.first};
    return {Rat(0), std::max(-iv.first, iv.second)};
}

} // namespace

CircleCensus circle_census(const IntPoly& p) {
    SplitCensus s = census_with_core(p);
    return {s.degree, s.on_circle, s.off_circle};
}

RootLocationReport classify_self_reciprocal(const IntPoly& p, const Rat& bracket_tol) {
    if (bracket_tol <= 0) throw std::invalid_argument("bracket tolerance must be positive");
    SplitCensus census = census_with_core(p);

    RootLocationReport r;
    r.degree = census.degree;
    r.on_unit_circle = census.on_circle;
    r.off_unit_circle = census.off_circle;
    r.all_on_circle = census.off_circle == 0;
    r.is_rho_one = r.all_on_circle;
    r.cyclotomic_indices = extract_cyclotomic_part(p).indices;

    if (r.all_on_circle) {
        r.rho_lo = 1;
        r.rho_hi = 1;
        return r;
    }

    // rho >= 1 always: roots pair up under inversion.
    Rat lo = 1, hi = 1;
    IntPoly sf = squarefree_part(p);
    if (!sf.is_constant()) {
        auto intervals = isolate_real_roots(sf);
        if (!intervals.empty()) {
            SturmChain chain = sturm_chain(sf);
            auto refine = [&](std::pair<Rat, Rat>& iv) {
                while (iv.second - iv.first > bracket_tol) {
                    Rat mid = (iv.first + iv.second) / 2;
                    if (count_roots_between(chain, iv.first, mid) == 1)
                        iv.second = mid;
                    else
                        iv.first = mid;
                }
            };
            refine(intervals.front());
            refine(intervals.back());
            auto low_abs = abs_interval(intervals.front());
            auto high_abs = abs_interval(intervals.back());
            lo = std::max(lo, std::max(low_abs.first, high_abs.first));
            hi = std::max(hi, std::max(low_abs.second, high_abs.second));
        }
    }

    long core_real = census.core.is_constant() ? 0 : count_real_roots_total(census.core, true);
    long core_nonreal = (census.core.is_constant() ? 0 : census.core.degree()) - core_real;
    if (core_nonreal > 0) {
        // Non-real core roots put conjugate quadruples of p off the circle;
        // their modulus is only bracketed numerically, never used in a
        // decision.
        auto roots = numeric_roots(sf);
        bool refined = false;
        if (roots) {
            double max_mod = 0.0;
            for (const auto& z : *roots) max_mod = std::max(max_mod, std::abs(z));
            if (std::isfinite(max_mod) && max_mod > 0) {
                Rat est(max_mod);
                Rat pad = est / 1000000000; // ~1e-9 relative slack
                lo = std::max(lo, est - pad);
                hi = std::max(hi, est + pad);
                refined = true;
            }
        }
        if (!refined) {
            hi = std::max(hi, cauchy_bound(p));
        }
    }
    r.rho_lo = lo;
    r.rho_hi = hi;
    return r;
}

int off_circle_bound_check(const WeightType& w) {
    return static_cast<int>(circle_census(extended_canonical_coxeter(w)).off_circle);
}

bool monotonicity_check(const WeightType& w) {
    bool inc_rho_one = circle_census(extended_canonical_coxeter(w.incremented())).off_circle == 0;
    if (!inc_rho_one) return true;
    return circle_census(extended_canonical_coxeter(w)).off_circle == 0;
}

std::optional<std::vector<std::complex<double>>> numeric_roots(const IntPoly& p, int max_iter, double tol) {
    if (p.is_zero() || p.is_constant()) return std::vector<std::complex<double>>{};
    int n = p.degree();
    std::vector<std::complex<double>> coeff(static_cast<size_t>(n) + 1);
    double lead = p.leading().get_d();
    if (!std::isfinite(lead) || lead == 0.0) return std::nullopt;
    for (int i = 0; i <= n; ++i) {
        double c = p.coeff(i).get_d() / lead;
        if (!std::isfinite(c)) return std::nullopt;
        coeff[static_cast<size_t>(i)] = c;
    }
    auto value = [&](const std::complex<double>& z) {
        std::complex<double> acc = 0.0;
        for (int i = n; i >= 0; --i) acc = acc * z + coeff[static_cast<size_t>(i)];
        return acc;
    };

    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> cur = 1.0;
    for (int k = 0; k < n; ++k) {
        cur *= seed;
        z[static_cast<size_t>(k)] = cur;
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (denom == std::complex<double>(0.0, 0.0)) {
                z[static_cast<size_t>(i)] += std::complex<double>(1e-6, 1e-6);
                max_step = 1.0;
                continue;
            }
            std::complex<double> step = value(z[static_cast<size_t>(i)]) / denom;
            z[static_cast<size_t>(i)] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[static_cast<size_t>(i)])));
        }
        if (max_step <= tol) return z;
    }
    return std::nullopt;
}

} // namespace coxpoly
