#include "coxpoly/suites.hpp"

#include "coxpoly/chebyshev.hpp"
#include "coxpoly/cyclotomic.hpp"
#include "coxpoly/spectra.hpp"
#include "coxpoly/symmetry.hpp"

#include <random>
#include <sstream>

namespace coxpoly {

namespace {

std::string describe(const WeightType& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.weights().size(); ++i) {
        if (i) os << ",";
        os << w.weights()[i];
    }
    os << ")";
    return os.str();
}

} // namespace

SuiteResult representation_suite(int max_sum, int max_t, int max_weight) {
    SuiteResult r;
    for (const WeightType& w : enumerate_weight_types(max_sum, max_t, max_weight)) {
        ++r.checked;
        if (!verify_representation(w)) {
            r.ok = false;
            r.detail = "representation identity fails for " + describe(w);
            return r;
        }
    }
    r.detail = "all representation identities hold";
    return r;
}

SuiteResult recursion_suite(int max_sum, int max_t, int max_weight) {
    SuiteResult r;
    for (const WeightType& w : enumerate_weight_types(max_sum, max_t, max_weight)) {
        if (w.last() < 2) continue;
        ++r.checked;
        if (!verify_recursion(w)) {
            r.ok = false;
            r.detail = "recursion fails for " + describe(w);
            return r;
        }
    }
    r.detail = "both recursions hold";
    return r;
}

SuiteResult acampo_suite(int max_vertices) {
    SuiteResult r;
    for (int n = 1; n <= max_vertices; ++n) {
        long index = 0;
        for (const Multigraph& tree : enumerate_trees(n)) {
            ++r.checked;
            ++index;
            if (compose_t2(tree_coxeter(tree)) != symmetrize(tree_charpoly(tree, true))) {
                std::ostringstream os;
                os << "tree identity fails for tree #" << index << " on " << n << " vertices";
                r.ok = false;
                r.detail = os.str();
                return r;
            }
        }
    }
    r.detail = "tree identity holds on every enumerated tree";
    return r;
}

SuiteResult interlacing_suite(int max_sum, int max_t, int max_weight) {
    SuiteResult r;
    for (const WeightType& w : enumerate_weight_types(max_sum, max_t, max_weight)) {
        if (w.last() < 2) continue;
        ++r.checked;

        IntPoly q_mid = q_poly(w);
        IntPoly q_up = q_poly(w.incremented());
        IntPoly q_down = q_poly(w.decremented());

        if (!interlacing_check(q_mid, q_up)) {
            r.ok = false;
            r.detail = "interlacing fails for " + describe(w);
            return r;
        }

        // Sign alternation: around each root of q_mid the neighbors in the
        // ladder take opposite signs. Shrink each isolating interval until
        // both neighbors are sign-stable on it.
        SturmChain chain_mid = sturm_chain(q_mid);
        SturmChain chain_up = sturm_chain(q_up);
        SturmChain chain_down = sturm_chain(q_down);
        for (auto [lo, hi] : isolating_intervals(chain_mid, Rat(0))) {
            while (count_roots_between(chain_up, lo, hi) > 0 || count_roots_between(chain_down, lo, hi) > 0) {
                Rat mid = (lo + hi) / 2;
                if (count_roots_between(chain_mid, lo, mid) == 1)
                    hi = mid;
                else
                    lo = mid;
            }
            Rat mid = (lo + hi) / 2;
            if (sign_at(q_up, mid) * sign_at(q_down, mid) >= 0) {
                r.ok = false;
                r.detail = "sign alternation fails for " + describe(w);
                return r;
            }
        }
    }
    r.detail = "interlacing and sign alternation hold";
    return r;
}

SuiteResult chebyshev_suite(int max_identity_n, int max_path_n) {
    SuiteResult r;
    for (int n = 0; n <= max_identity_n; ++n) {
        ++r.checked;
        if (!verify_v_u_identity(n)) {
            r.ok = false;
            r.detail = "v/u identity fails at n = " + std::to_string(n);
            return r;
        }
    }
    for (int n = 1; n <= max_path_n; ++n) {
        ++r.checked;
        if (tree_charpoly(path(n), true) != chebyshev_u(n)) {
            r.ok = false;
            r.detail = "path characteristic polynomial differs from u_n at n = " + std::to_string(n);
            return r;
        }
    }
    r.detail = "Chebyshev identities hold";
    return r;
}

SuiteResult kronecker_suite(int count, int max_degree, unsigned long seed) {
    SuiteResult r;
    std::mt19937_64 rng(seed);

    std::vector<long> candidates;
    for (long n = 2; n <= 2L * max_degree * max_degree; ++n)
        if (euler_totient(n) <= max_degree) candidates.push_back(n);

    long perturbed_nonconstant = 0;
    for (int trial = 0; trial < count; ++trial) {
        ++r.checked;
        IntPoly p = IntPoly::one();
        int deg = 0;
        while (true) {
            std::vector<long> fitting;
            for (long n : candidates)
                if (euler_totient(n) <= max_degree - deg) fitting.push_back(n);
            if (fitting.empty()) break;
            if (deg > 0 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) break;
            long n = fitting[std::uniform_int_distribution<size_t>(0, fitting.size() - 1)(rng)];
            p *= cyclo(n);
            deg += static_cast<int>(euler_totient(n));
        }

        if (!is_cyclotomic_product(p)) {
            r.ok = false;
            r.detail = "cyclotomic product not recognized on trial " + std::to_string(trial);
            return r;
        }
        if (compose_t2(p) != symmetrize(represent_unit_disk(p))) {
            r.ok = false;
            r.detail = "representation round-trip fails on trial " + std::to_string(trial);
            return r;
        }

        int k = std::uniform_int_distribution<int>(0, deg - 1)(rng);
        IntPoly perturbed = p + IntPoly::monomial(1, k);
        if (!extract_cyclotomic_part(perturbed).remainder.is_constant()) ++perturbed_nonconstant;
    }

    std::ostringstream os;
    os << "perturbed remainders non-constant: " << perturbed_nonconstant << "/" << count;
    r.detail = os.str();
    if (perturbed_nonconstant * 100 < count * 95) r.ok = false;
    return r;
}

} // namespace coxpoly
