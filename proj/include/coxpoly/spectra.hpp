#pragma once

#include "coxpoly/coxeter.hpp"
#include "coxpoly/int_poly.hpp"

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace coxpoly {

/// Signed remainder sequence of the squarefree part of a polynomial.
/// The members are primitive integer polynomials: each is the negated
/// remainder of the two before it up to a positive scalar, which leaves
/// every sign variation count unchanged. Ends in a nonzero constant.
struct SturmChain {
    std::vector<IntPoly> chain;
};

/// Builds the chain on the squarefree part of p. Throws on constant input.
SturmChain sturm_chain(const IntPoly& p);

/// Sign of p at x nudged by an infinitesimal: side < 0 evaluates at x-,
/// side > 0 at x+, side == 0 exactly at x. Symbolic perturbation via
/// derivatives; no numeric epsilon is involved.
int sign_near(const IntPoly& p, const Rat& x, int side);

/// Sign variations of the chain at x (with the same side convention).
int variations(const SturmChain& c, const Rat& x, int side);
int variations_at_infinity(const SturmChain& c, int sign_of_infinity);

/// Distinct roots of the chain's polynomial in the half-open (a, b].
long count_roots_between(const SturmChain& c, const Rat& a, const Rat& b);

/// Isolating intervals from a prebuilt chain, subdivided until each holds
/// one root and then refined to width <= width_cap (0 skips refinement).
std::vector<std::pair<Rat, Rat>> isolating_intervals(const SturmChain& c, const Rat& width_cap);

/// Number of real roots of p in the closed interval [a, b]; distinct
/// roots by default, or counted with multiplicity via the squarefree
/// decomposition. Endpoint roots are included (exact symbolic
/// perturbation, not numeric nudging). Throws if a > b or p is zero.
long count_real_roots(const IntPoly& p, const Rat& a, const Rat& b, bool with_multiplicity = false);

/// Real roots over the whole line.
long count_real_roots_total(const IntPoly& p, bool with_multiplicity = false);

/// Isolating intervals (lo, hi], one per distinct real root, pairwise
/// disjoint, each of width <= 2^-20, sorted ascending. Requires a
/// squarefree input.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p);

/// True iff every pair of consecutive real roots of q_upper encloses
/// (weakly) a real root of q_lower. Decided by exact interval refinement;
/// shared roots are recognized through the gcd and count as enclosed.
bool interlacing_check(const IntPoly& q_lower, const IntPoly& q_upper);

/// On/off unit-circle census of a self-reciprocal polynomial, with
/// multiplicity. Exact: roots on the circle correspond to roots of the
/// parity-split core in [-2, 2].
struct CircleCensus {
    int degree = 0;
    long on_circle = 0;
    long off_circle = 0;
};
CircleCensus circle_census(const IntPoly& p);

/// Full spectral summary of a self-reciprocal polynomial.
struct RootLocationReport {
    int degree = 0;
    long on_unit_circle = 0;
    long off_unit_circle = 0;
    bool all_on_circle = false;
    bool is_rho_one = false;
    Rat rho_lo; // bracket for the spectral radius
    Rat rho_hi;
    std::vector<long> cyclotomic_indices;
};

/// Classifies a self-reciprocal polynomial. All counts and the rho=1
/// decision are exact. The spectral-radius bracket is exact when the
/// dominant root is real; when the core has non-real roots a numeric
/// root finder only refines (never decides), and on convergence failure
/// the bracket degrades to [1, Cauchy bound].
RootLocationReport classify_self_reciprocal(const IntPoly& p, const Rat& bracket_tol = Rat(1, 1 << 20));

/// Number of roots of the extended canonical Coxeter polynomial off the
/// unit circle; always even, and at most 4.
int off_circle_bound_check(const WeightType& w);

/// True iff rho = 1 for the incremented type implies rho = 1 for w.
bool monotonicity_check(const WeightType& w);

/// All complex roots by Durand-Kerner simultaneous iteration, or nullopt
/// if the iteration fails to converge. Test oracle and bracket refiner
/// only; never feeds a boolean decision.
std::optional<std::vector<std::complex<double>>> numeric_roots(const IntPoly& p, int max_iter = 200,
                                                               double tol = 1e-12);

} // namespace coxpoly
