#include "coxpoly/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace coxpoly {

Multigraph::Multigraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
}

void Multigraph::check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::invalid_argument("vertex index out of range");
    if (i == j) throw std::invalid_argument("loops are not allowed (zero diagonal)");
}

int Multigraph::multiplicity(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::invalid_argument("vertex index out of range");
    return adj_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
}

void Multigraph::add_edge(int i, int j, int mult) {
    check_pair(i, j);
    if (mult < 1) throw std::invalid_argument("edge multiplicity must be >= 1");
    adj_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)] += mult;
    adj_[static_cast<size_t>(j) * static_cast<size_t>(n_) + static_cast<size_t>(i)] += mult;
}

long Multigraph::edge_count() const {
    long total = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) total += multiplicity(i, j);
    return total;
}

bool Multigraph::is_simple() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (multiplicity(i, j) > 1) return false;
    return true;
}

Multigraph path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph star(const std::vector<int>& weights) {
    if (weights.empty()) throw std::invalid_argument("star requires at least one arm weight");
    int n = 1;
    for (int p : weights) {
        if (p < 1) throw std::invalid_argument("star weights must be >= 1");
        n += p - 1;
    }
    Multigraph g(n);
    int next = 1;
    for (int p : weights) {
        int prev = 0; // center
        for (int k = 0; k < p - 1; ++k) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

Multigraph kronecker_graph(int s) {
    if (s < 1) throw std::invalid_argument("kronecker graph requires s >= 1");
    Multigraph g(2);
    g.add_edge(0, 1, s);
    return g;
}

Multigraph dynkin(DynkinFamily family, int n) {
    switch (family) {
    case DynkinFamily::A:
        if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
        return path(n);
    case DynkinFamily::D: {
        if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
        // Two short arms and one of length n-3 around a branch vertex.
        return star({2, 2, n - 2});
    }
    case DynkinFamily::E: {
        if (n < 6 || n > 8) throw std::invalid_argument("E_n requires n in {6, 7, 8}");
        return star({2, 3, n - 3});
    }
    }
    throw std::invalid_argument("unknown Dynkin family");
}

IntPoly charpoly(const Multigraph& g) {
    int n = g.vertex_count();
    if (n == 0) return IntPoly::one();

    auto at = [n](std::vector<Int>& m, int i, int j) -> Int& {
        return m[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
    };
    std::vector<Int> a(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(a, i, j) = g.multiplicity(i, j);

    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A*M_{k-1} + c_{k-1}*A)/k.
    // All divisions are exact over Z for an integer matrix.
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1);
    coeffs[static_cast<size_t>(n)] = 1;
    std::vector<Int> m = a;
    Int c;
    for (int k = 1; k <= n; ++k) {
        Int trace = 0;
        for (int i = 0; i < n; ++i) trace += at(m, i, i);
        if (!mpz_divisible_ui_p(trace.get_mpz_t(), static_cast<unsigned long>(k)))
            throw std::logic_error("Faddeev-LeVerrier trace not divisible");
        mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
        c = -c;
        coeffs[static_cast<size_t>(n - k)] = c;
        if (k == n) break;
        for (int i = 0; i < n; ++i) at(m, i, i) += c;
        std::vector<Int> next(static_cast<size_t>(n) * static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                const Int& aij = at(a, i, l);
                if (aij == 0) continue;
                for (int j = 0; j < n; ++j)
                    mpz_addmul(next[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]
                                   .get_mpz_t(),
                               aij.get_mpz_t(), at(m, l, j).get_mpz_t());
            }
        m = std::move(next);
    }
    return IntPoly(std::move(coeffs));
}

namespace {

std::vector<std::vector<int>> adjacency_lists(const Multigraph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = 0; j < g.vertex_count(); ++j)
            if (i != j && g.multiplicity(i, j) > 0) adj[static_cast<size_t>(i)].push_back(j);
    return adj;
}

class TreeCharpoly {
public:
    explicit TreeCharpoly(const Multigraph& g) : adj_(adjacency_lists(g)) {}

    IntPoly run(int n) {
        std::vector<int> all(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
        return forest(all);
    }

private:
    IntPoly forest(const std::vector<int>& verts) {
        if (verts.empty()) return IntPoly::one();
        std::vector<char> in(adj_.size(), 0);
        for (int v : verts) in[static_cast<size_t>(v)] = 1;
        std::vector<char> seen(adj_.size(), 0);
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
                for (int w : adj_[static_cast<size_t>(u)])
                    if (in[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                        seen[static_cast<size_t>(w)] = 1;
                        queue.push_back(w);
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
            result = IntPoly::variable();
        } else {
            std::vector<char> in(adj_.size(), 0);
            for (int v : comp) in[static_cast<size_t>(v)] = 1;
            int leaf = -1, neighbor = -1;
            for (int v : comp) {
                int deg = 0, nb = -1;
                for (int w : adj_[static_cast<size_t>(v)])
                    if (in[static_cast<size_t>(w)]) {
                        ++deg;
                        nb = w;
                    }
                if (deg == 1) {
                    leaf = v;
                    neighbor = nb;
                    break;
                }
            }
            if (leaf < 0) throw std::logic_error("leaf-deletion recursion found no leaf");
            std::vector<int> minus_a, minus_ab;
            for (int v : comp) {
                if (v != leaf) minus_a.push_back(v);
                if (v != leaf && v != neighbor) minus_ab.push_back(v);
            }
            result = IntPoly::variable() * component(minus_a) - forest(minus_ab);
        }
        memo_.emplace(comp, result);
        return result;
    }

    std::vector<std::vector<int>> adj_;
    std::map<std::vector<int>, IntPoly> memo_;
};

} // namespace

IntPoly tree_charpoly(const Multigraph& g, bool certified_tree) {
    if (!certified_tree) {
        if (g.vertex_count() < 1 || !g.is_simple() || !is_connected(g) ||
            g.edge_count() != g.vertex_count() - 1)
            throw std::invalid_argument("tree_charpoly requires a simple tree");
    }
    return TreeCharpoly(g).run(g.vertex_count());
}

bool is_bipartite(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v = 0; v < n; ++v) {
                if (v == u || g.multiplicity(u, v) == 0) continue;
                if (color[static_cast<size_t>(v)] == -1) {
                    color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
                    queue.push_back(v);
                } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected(const Multigraph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < n; ++v)
            if (v != u && g.multiplicity(u, v) > 0 && !seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++count;
                queue.push_back(v);
            }
    }
    return count == n;
}

std::pair<Rat, Rat> graph_spectral_radius(const Multigraph& g, const Rat& tol) {
    if (g.vertex_count() == 0 || !is_connected(g))
        throw std::invalid_argument("spectral radius requires a connected nonempty graph");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");

    IntPoly chi = charpoly(g);
    // chi has all roots real, so x exceeds the largest root exactly when
    // chi and all its derivatives are positive at x.
    std::vector<IntPoly> ders;
    for (IntPoly d = chi; !d.is_constant(); d = derivative(d)) ders.push_back(d);
    auto above_all_roots = [&](const Rat& x) {
        for (const IntPoly& d : ders)
            if (sign_at(d, x) <= 0) return false;
        return true;
    };

    Int max_abs = 0;
    for (const Int& c : chi.coeffs()) {
        Int a = abs(c);
        if (a > max_abs) max_abs = a;
    }
    Rat hi(max_abs + 1);
    Rat lo = hi - 1;
    Rat step = 1;
    while (above_all_roots(lo)) {
        lo -= step;
        step *= 2;
    }
    while (hi - lo > tol) {
        Rat mid = (hi + lo) / 2;
        if (above_all_roots(mid))
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

namespace {

std::string ahu_string(int v, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> children;
    for (int w : adj[static_cast<size_t>(v)])
        if (w != parent) children.push_back(ahu_string(w, v, adj));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (const std::string& c : children) s += c;
    s += ")";
    return s;
}

std::string canonical_tree_string(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 1) return "()";
    // Strip leaves layer by layer; the last one or two vertices are centers.
    std::vector<int> degree(static_cast<size_t>(n));
    std::vector<int> order;
    std::deque<int> leaves;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
        if (degree[static_cast<size_t>(v)] <= 1) leaves.push_back(v);
    }
    int remaining = n;
    std::vector<char> removed(static_cast<size_t>(n), 0);
    while (remaining > 2) {
        std::deque<int> next;
        for (int v : leaves) {
            removed[static_cast<size_t>(v)] = 1;
            --remaining;
            for (int w : adj[static_cast<size_t>(v)])
                if (!removed[static_cast<size_t>(w)] && --degree[static_cast<size_t>(w)] == 1)
                    next.push_back(w);
        }
        leaves = std::move(next);
    }
    std::string best;
    for (int v = 0; v < n; ++v) {
        if (removed[static_cast<size_t>(v)]) continue;
        std::string s = ahu_string(v, -1, adj);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

} // namespace

std::vector<Multigraph> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("tree enumeration requires n >= 1");
    std::map<std::string, Multigraph> found;
    if (n == 1) {
        found.emplace("()", Multigraph(1));
    } else {
        // Every unlabeled tree admits a labeling with parent[i] < i, so
        // sweeping all parent arrays and deduplicating by canonical form
        // is exhaustive.
        std::vector<int> parent(static_cast<size_t>(n), 0);
        while (true) {
            std::vector<std::vector<int>> adj(static_cast<size_t>(n));
            for (int i = 1; i < n; ++i) {
                adj[static_cast<size_t>(i)].push_back(parent[static_cast<size_t>(i)]);
                adj[static_cast<size_t>(parent[static_cast<size_t>(i)])].push_back(i);
            }
            std::string key = canonical_tree_string(adj);
            if (!found.count(key)) {
                Multigraph g(n);
                for (int i = 1; i < n; ++i) g.add_edge(parent[static_cast<size_t>(i)], i);
                found.emplace(std::move(key), std::move(g));
            }
            int pos = n - 1;
            while (pos >= 1 && parent[static_cast<size_t>(pos)] == pos - 1) parent[static_cast<size_t>(pos--)] = 0;
            if (pos < 1) break;
            ++parent[static_cast<size_t>(pos)];
        }
    }
    std::vector<Multigraph> out;
    out.reserve(found.size());
    for (auto& kv : found) out.push_back(std::move(kv.second));
    return out;
}

} // namespace coxpoly
