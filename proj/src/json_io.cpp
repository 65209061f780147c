#include "coxpoly/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace coxpoly {

namespace {

Json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Int x;
        if (mpz_set_str(x.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
            throw std::invalid_argument("malformed integer literal: " + j.get<std::string>());
        return x;
    }
    throw std::invalid_argument("polynomial coefficients must be integers or integer strings");
}

std::string join(const std::vector<long>& xs) {
    std::ostringstream os;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ",";
        os << xs[i];
    }
    return os.str();
}

std::string join(const std::vector<int>& xs) {
    std::ostringstream os;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ",";
        os << xs[i];
    }
    return os.str();
}

} // namespace

Json poly_to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const Int& c : p.coeffs()) arr.push_back(int_to_json(c));
    return arr;
}

IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("a polynomial must be a JSON array of coefficients");
    std::vector<Int> coeffs;
    coeffs.reserve(j.size());
    for (const auto& el : j) coeffs.push_back(int_from_json(el));
    return IntPoly(std::move(coeffs));
}

Json graph_to_json(const Multigraph& g) {
    Json out;
    out["n"] = g.vertex_count();
    Json edges = Json::array();
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.multiplicity(i, j) > 0) edges.push_back(Json::array({i, j, g.multiplicity(i, j)}));
    out["edges"] = std::move(edges);
    return out;
}

Multigraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph JSON requires an integer field \"n\"");
    Multigraph g(j["n"].get<int>());
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3)
                throw std::invalid_argument("each edge must be [i, j] or [i, j, mult]");
            int a = e[0].get<int>();
            int b = e[1].get<int>();
            int mult = e.size() == 3 ? e[2].get<int>() : 1;
            if (a >= b) throw std::invalid_argument("edges must satisfy i < j");
            g.add_edge(a, b, mult);
        }
    }
    return g;
}

Json report_to_json(const RootLocationReport& r) {
    Json out;
    out["degree"] = r.degree;
    out["on_circle"] = r.on_unit_circle;
    out["off_circle"] = r.off_unit_circle;
    out["rho_is_one"] = r.is_rho_one;
    out["rho_bracket"] = Json::array({int_to_json(r.rho_lo.get_num()), int_to_json(r.rho_lo.get_den()),
                                      int_to_json(r.rho_hi.get_num()), int_to_json(r.rho_hi.get_den())});
    out["cyclotomic_indices"] = r.cyclotomic_indices;
    return out;
}

Json bundle_to_json(const CoxeterBundle& b) {
    Json out;
    out["weights"] = b.weight_type.weights();
    out["star"] = poly_to_json(b.star);
    out["canonical"] = poly_to_json(b.canonical);
    out["extended"] = poly_to_json(b.extended);
    out["q"] = poly_to_json(b.q);
    return out;
}

Json sweep_to_json(const SweepReport& s) {
    Json out;
    out["max_sum"] = s.max_sum;
    out["max_t"] = s.max_t;
    Json summary;
    summary["types"] = s.summary.type_count;
    summary["rho_one_count"] = s.summary.rho_one_count;
    summary["max_off_circle"] = s.summary.max_off_circle;
    out["summary"] = std::move(summary);
    Json rows = Json::array();
    for (const SweepRow& row : s.rows) {
        Json r;
        r["weights"] = row.weights.weights();
        r["report"] = report_to_json(row.report);
        r["representation_ok"] = row.representation_ok;
        r["recursion_ok"] = row.recursion_ok;
        rows.push_back(std::move(r));
    }
    out["rows"] = std::move(rows);
    return out;
}

std::string sweep_to_csv(const SweepReport& s) {
    std::ostringstream os;
    os << "weights;degree;on_circle;off_circle;rho_is_one;cyclotomic_indices\n";
    for (const SweepRow& row : s.rows) {
        os << join(row.weights.weights()) << ";" << row.report.degree << ";" << row.report.on_unit_circle
           << ";" << row.report.off_unit_circle << ";" << (row.report.is_rho_one ? "true" : "false") << ";"
           << join(row.report.cyclotomic_indices) << "\n";
    }
    return os.str();
}

} // namespace coxpoly
