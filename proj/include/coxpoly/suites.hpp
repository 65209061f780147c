#pragma once

#include "coxpoly/coxeter.hpp"

#include <string>

namespace coxpoly {

/// Outcome of one verification sweep. `detail` holds the first
/// counterexample on failure, or a short summary on success.
struct SuiteResult {
    bool ok = true;
    long checked = 0;
    std::string detail;
};

/// Representation identities (star / canonical / extended) over the grid
/// of weight types with sum <= max_sum, t <= max_t, p_i <= max_weight
/// (0 = unbounded).
SuiteResult representation_suite(int max_sum, int max_t, int max_weight = 0);

/// Three-term recursions in the last weight over the same grid, p_t >= 2.
SuiteResult recursion_suite(int max_sum, int max_t, int max_weight = 0);

/// Tree identity f(T^2) = symmetrize(charpoly) for every unlabeled tree
/// with up to max_vertices vertices.
SuiteResult acampo_suite(int max_vertices);

/// Interlacing of q-polynomial roots along the last-weight ladder, plus
/// the sign-alternation property at every isolated root.
SuiteResult interlacing_suite(int max_sum, int max_t, int max_weight = 0);

/// v_{n+1}(T^2) = symmetrize(u_n) for n <= max_identity_n, and the path
/// characteristic polynomial equals u_n for n <= max_path_n.
SuiteResult chebyshev_suite(int max_identity_n, int max_path_n);

/// Round-trip through the unit-disk representation on `count` random
/// cyclotomic products of degree <= max_degree, plus the perturbation
/// statistic (remainder non-constant in >= 95% after adding a monomial).
SuiteResult kronecker_suite(int count, int max_degree, unsigned long seed);

} // namespace coxpoly
