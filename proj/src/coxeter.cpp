#include "coxpoly/coxeter.hpp"

#include "coxpoly/chebyshev.hpp"
#include "coxpoly/cyclotomic.hpp"
#include "coxpoly/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace coxpoly {

WeightType::WeightType(std::vector<int> weights) : weights_(std::move(weights)) {
    if (weights_.size() < 2) throw std::invalid_argument("weight type requires at least two weights");
    for (int p : weights_)
        if (p < 1) throw std::invalid_argument("weights must be >= 1");
    std::sort(weights_.begin(), weights_.end());
}

int WeightType::weight_sum() const {
    int s = 0;
    for (int p : weights_) s += p;
    return s;
}

int WeightType::canonical_vertex_count() const { return 2 + weight_sum() - arm_count(); }

WeightType WeightType::incremented() const {
    std::vector<int> w = weights_;
    ++w.back();
    return WeightType(std::move(w));
}

WeightType WeightType::decremented() const {
    if (weights_.back() < 2) throw std::invalid_argument("recursion requires p_t >= 2");
    std::vector<int> w = weights_;
    --w.back();
    return WeightType(std::move(w));
}

IntPoly one_point_reduction(const IntPoly& f_b, const IntPoly& f_c) {
    return IntPoly{1, 1} * f_b - IntPoly::variable() * f_c;
}

Multigraph star_graph(const WeightType& w) { return star(w.weights()); }

IntPoly star_coxeter(const WeightType& w) {
    IntPoly prod_all = IntPoly::one();
    for (int p : w.weights()) prod_all *= v(p);
    IntPoly result = IntPoly{1, 1} * prod_all;

    IntPoly arm_sum;
    for (size_t i = 0; i < w.weights().size(); ++i) {
        int p = w.weights()[i];
        if (p < 2) continue; // v_0 = 0 kills the summand
        IntPoly term = v(p - 1);
        for (size_t j = 0; j < w.weights().size(); ++j)
            if (j != i) term *= v(w.weights()[j]);
        arm_sum += term;
    }
    return result - IntPoly::variable() * arm_sum;
}

IntPoly canonical_coxeter(const WeightType& w) {
    IntPoly result = IntPoly{-1, 1} * IntPoly{-1, 1};
    for (int p : w.weights()) result *= v(p);
    return result;
}

IntPoly extended_canonical_coxeter(const WeightType& w) {
    return one_point_reduction(canonical_coxeter(w), star_coxeter(w));
}

IntPoly q_poly(const WeightType& w) {
    IntPoly result = IntPoly::variable() * charpoly(kronecker_graph(2));
    for (int p : w.weights()) result *= chebyshev_u(p - 1);
    return result - tree_charpoly(star_graph(w), /*certified_tree=*/true);
}

CoxeterBundle coxeter_bundle(const WeightType& w) {
    return {w, star_coxeter(w), canonical_coxeter(w), extended_canonical_coxeter(w), q_poly(w)};
}

bool verify_representation(const WeightType& w) {
    const std::vector<int>& ps = w.weights();

    IntPoly chi_star = tree_charpoly(star_graph(w), /*certified_tree=*/true);
    if (compose_t2(star_coxeter(w)) != symmetrize(chi_star)) return false;

    IntPoly rhs = symmetrize(charpoly(kronecker_graph(2)));
    for (int p : ps)
        if (p >= 2) rhs *= symmetrize(chebyshev_u(p - 1)); // chi_[0] = 1 contributes nothing
    if (compose_t2(canonical_coxeter(w)) != rhs) return false;

    return compose_t2(extended_canonical_coxeter(w)) == symmetrize(q_poly(w));
}

bool verify_recursion(const WeightType& w) {
    if (w.last() < 2) throw std::invalid_argument("recursion requires p_t >= 2");
    WeightType up = w.incremented();
    WeightType down = w.decremented();
    const IntPoly t = IntPoly::variable();
    if (extended_canonical_coxeter(up) !=
        t * extended_canonical_coxeter(w) - extended_canonical_coxeter(down))
        return false;
    return q_poly(up) == t * q_poly(w) - q_poly(down);
}

namespace {

class TreeCoxeter {
public:
    explicit TreeCoxeter(const Multigraph& g) : g_(g) {}

    IntPoly run() {
        std::vector<int> all(static_cast<size_t>(g_.vertex_count()));
        for (int i = 0; i < g_.vertex_count(); ++i) all[static_cast<size_t>(i)] = i;
        return forest(all);
    }

private:
    IntPoly forest(const std::vector<int>& verts) {
        if (verts.empty()) return IntPoly::one();
        std::vector<char> in(static_cast<size_t>(g_.vertex_count()), 0);
        for (int v : verts) in[static_cast<size_t>(v)] = 1;
        std::vector<char> seen(static_cast<size_t>(g_.vertex_count()), 0);
        IntPoly acc = IntPoly::one();
        for (int v : verts) {
            if (seen[static_cast<size_t>(v)]) continue;
            std::vector<int> comp;
            std::deque<int> queue{v};
            seen[static_cast<size_t>(v)] = 1;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                comp.push_back(u);
                for (int wv = 0; wv < g_.vertex_count(); ++wv)
                    if (wv != u && g_.multiplicity(u, wv) > 0 && in[static_cast<size_t>(wv)] &&
                        !seen[static_cast<size_t>(wv)]) {
                        seen[static_cast<size_t>(wv)] = 1;
                        queue.push_back(wv);
                    }
            }
            std::sort(comp.begin(), comp.end());
            acc *= component(comp);
        }
        return acc;
    }

    IntPoly component(const std::vector<int>& comp) {
        auto it = memo_.find(comp);
        if (it != memo_.end()) return it->second;
        IntPoly result;
        if (comp.size() == 1) {
            result = IntPoly{1, 1};
        } else {
            std::vector<char> in(static_cast<size_t>(g_.vertex_count()), 0);
            for (int v : comp) in[static_cast<size_t>(v)] = 1;
            int leaf = -1, neighbor = -1;
            for (int v : comp) {
                int deg = 0, nb = -1;
                for (int wv = 0; wv < g_.vertex_count(); ++wv)
                    if (wv != v && g_.multiplicity(v, wv) > 0 && in[static_cast<size_t>(wv)]) {
                        ++deg;
                        nb = wv;
                    }
                if (deg == 1) {
                    leaf = v;
                    neighbor = nb;
                    break;
                }
            }
            if (leaf < 0) throw std::logic_error("leaf recursion found no leaf");
            std::vector<int> minus_a, minus_ab;
            for (int v : comp) {
                if (v != leaf) minus_a.push_back(v);
                if (v != leaf && v != neighbor) minus_ab.push_back(v);
            }
            result = IntPoly{1, 1} * component(minus_a) - IntPoly::variable() * forest(minus_ab);
        }
        memo_.emplace(comp, result);
        return result;
    }

    const Multigraph& g_;
    std::map<std::vector<int>, IntPoly> memo_;
};

} // namespace

IntPoly tree_coxeter(const Multigraph& g) {
    if (g.vertex_count() < 1 || !g.is_simple() || !is_connected(g) ||
        g.edge_count() != g.vertex_count() - 1)
        throw std::invalid_argument("tree_coxeter requires a simple tree");
    return TreeCoxeter(g).run();
}

std::vector<WeightType> enumerate_weight_types(int max_sum, int max_t, int max_weight) {
    std::vector<WeightType> out;
    if (max_sum < 2 || max_t < 2) return out;
    for (int s = 2; s <= max_sum; ++s) {
        std::vector<WeightType> of_sum;
        std::vector<int> partial;
        // Partitions of s into non-decreasing parts, at least two of them.
        struct Rec {
            int max_t, max_weight;
            std::vector<WeightType>& out;
            void go(int remaining, int min_part, std::vector<int>& cur) {
                if (remaining == 0) {
                    if (static_cast<int>(cur.size()) >= 2) out.emplace_back(cur);
                    return;
                }
                if (static_cast<int>(cur.size()) == max_t) return;
                for (int p = min_part; p <= remaining; ++p) {
                    if (max_weight > 0 && p > max_weight) break;
                    cur.push_back(p);
                    go(remaining - p, p, cur);
                    cur.pop_back();
                }
            }
        } rec{max_t, max_weight, of_sum};
        rec.go(s, 1, partial);
        std::sort(of_sum.begin(), of_sum.end());
        out.insert(out.end(), of_sum.begin(), of_sum.end());
    }
    return out;
}

} // namespace coxpoly
