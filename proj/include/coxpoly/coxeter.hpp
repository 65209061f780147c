#pragma once

#include "coxpoly/graph.hpp"
#include "coxpoly/int_poly.hpp"

#include <vector>

namespace coxpoly {

/// Weight tuple (p_1, ..., p_t) of a star / canonical / extended canonical
/// type, kept sorted non-decreasing; every polynomial attached to it is
/// symmetric in the weights, so the original order carries no information.
class WeightType {
public:
    explicit WeightType(std::vector<int> weights);

    const std::vector<int>& weights() const { return weights_; }
    int arm_count() const { return static_cast<int>(weights_.size()); }
    int weight_sum() const;
    /// Number of vertices of the canonical algebra: 2 + sum(p_i - 1).
    int canonical_vertex_count() const;
    int last() const { return weights_.back(); }

    /// Largest weight replaced by p_t + 1 (resp. p_t - 1).
    WeightType incremented() const;
    WeightType decremented() const; // requires p_t >= 2

    friend bool operator==(const WeightType& a, const WeightType& b) { return a.weights_ == b.weights_; }
    friend bool operator<(const WeightType& a, const WeightType& b) { return a.weights_ < b.weights_; }

private:
    std::vector<int> weights_;
};

/// The four polynomials attached to one weight type.
struct CoxeterBundle {
    WeightType weight_type;
    IntPoly star;      // Coxeter polynomial of the star quiver
    IntPoly canonical; // (T-1)^2 * prod v_{p_i}
    IntPoly extended;  // one-point extension of the canonical algebra
    IntPoly q;         // representing polynomial: extended(T^2) = q*
};

/// One-point extension step on Coxeter polynomials:
/// f_A = (1+T) f_B - T f_C.
IntPoly one_point_reduction(const IntPoly& f_b, const IntPoly& f_c);

/// The star graph underlying a weight type (center plus t arms).
Multigraph star_graph(const WeightType& w);

/// Coxeter polynomial of the star quiver [p_1,...,p_t]:
/// (T+1) prod v_{p_i} - T sum_i v_{p_i - 1} prod_{j != i} v_{p_j},
/// with v_0 = 0 and v_1 = 1 covering weight-1 arms.
IntPoly star_coxeter(const WeightType& w);

/// Coxeter polynomial of the canonical algebra: (T-1)^2 prod v_{p_i}.
IntPoly canonical_coxeter(const WeightType& w);

/// Coxeter polynomial of the extended canonical algebra:
/// (T+1)*(canonical) - T*(star). Monic self-reciprocal of degree
/// 3 + sum(p_i - 1).
IntPoly extended_canonical_coxeter(const WeightType& w);

/// The representing polynomial
/// q = T*chi_{K_2}*prod chi_{[p_i-1]} - chi_{[p_1,...,p_t]};
/// satisfies extended(T^2) = symmetrize(q).
IntPoly q_poly(const WeightType& w);

CoxeterBundle coxeter_bundle(const WeightType& w);

/// Exact check of the three representation identities tying the star,
/// canonical and extended polynomials to star / path / Kronecker
/// characteristic polynomials.
bool verify_representation(const WeightType& w);

/// Exact check of the Chebyshev-type three-term recursions in the last
/// weight, for both the extended polynomial and the q-polynomial.
/// Throws unless p_t >= 2.
bool verify_recursion(const WeightType& w);

/// Coxeter polynomial of a hereditary algebra whose quiver is the tree g
/// (orientation-independent), by the leaf recursion
/// f = (1+T) f(g-a) - T f(g-a-b). Satisfies
/// compose_t2(f) = symmetrize(charpoly(g)).
IntPoly tree_coxeter(const Multigraph& g);

/// All weight types in canonical form with sum(p_i) <= max_sum and
/// t <= max_t (and p_i <= max_weight when positive), ordered by
/// (weight sum, lexicographic weights).
std::vector<WeightType> enumerate_weight_types(int max_sum, int max_t, int max_weight = 0);

} // namespace coxpoly
