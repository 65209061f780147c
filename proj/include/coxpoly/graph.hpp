#pragma once

#include "coxpoly/int_poly.hpp"

#include <utility>
#include <vector>

namespace coxpoly {

/// Undirected multigraph: symmetric adjacency matrix of non-negative edge
/// multiplicities with zero diagonal.
class Multigraph {
public:
    explicit Multigraph(int n);

    int vertex_count() const { return n_; }
    int multiplicity(int i, int j) const;
    void add_edge(int i, int j, int mult = 1);

    /// Total number of edges counted with multiplicity.
    long edge_count() const;
    /// True iff every multiplicity is <= 1.
    bool is_simple() const;

private:
    void check_pair(int i, int j) const;
    int n_;
    std::vector<int> adj_; // row-major n x n
};

/// Linear graph on n vertices (n >= 1 edges in a chain; A_n).
Multigraph path(int n);

/// Star with arms of length p_i - 1 attached to a center vertex.
/// Vertex 0 is the center; arm i occupies the next p_i - 1 indices in
/// order moving outwards. All weights equal to 1 give a single vertex.
Multigraph star(const std::vector<int>& weights);

/// Two vertices joined by s parallel edges.
Multigraph kronecker_graph(int s);

enum class DynkinFamily { A, D, E };

/// Dynkin tree A_n (n>=1), D_n (n>=4) or E_n (n in {6,7,8}).
Multigraph dynkin(DynkinFamily family, int n);

/// Characteristic polynomial det(T*I - A) of the adjacency matrix,
/// computed exactly by the Faddeev-LeVerrier recurrence; every internal
/// division is checked exact. Empty graph gives 1.
IntPoly charpoly(const Multigraph& g);

/// Same value as charpoly, but computed by the leaf-deletion recursion
/// chi(G) = T*chi(G-a) - chi(G-a-b) for a leaf a with neighbor b, with
/// forests split into components. Independent of charpoly's code path.
/// Requires a simple tree; set certified_tree to skip the validation.
IntPoly tree_charpoly(const Multigraph& g, bool certified_tree = false);

bool is_bipartite(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Interval [lo, hi] of width <= tol containing the largest real root of
/// charpoly(g), found by exact dyadic bisection below the Cauchy bound.
/// Requires a connected nonempty graph.
std::pair<Rat, Rat> graph_spectral_radius(const Multigraph& g, const Rat& tol);

/// All unlabeled simple trees on exactly n vertices, one representative
/// per isomorphism class, in a deterministic order.
std::vector<Multigraph> enumerate_trees(int n);

} // namespace coxpoly
