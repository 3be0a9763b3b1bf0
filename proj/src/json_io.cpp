#include "qspace/json_io.hpp"

#include <sstream>

namespace qspace {

Json to_json(const HSeries& s) {
    return Json{{"order", s.order()}, {"coeffs", s.coeffs()}};
}

HSeries hseries_from_json(const Json& j) {
    try {
        if (j.is_number()) return HSeries(j.get<double>(), 1);
        if (j.is_array()) return HSeries::from_coeffs(j.get<std::vector<double>>());
        auto coeffs = j.at("coeffs").get<std::vector<double>>();
        if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(coeffs.size()))
            throw UsageError("series order does not match the coefficient count");
        return HSeries::from_coeffs(std::move(coeffs));
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed series: ") + e.what());
    }
}

namespace {

Json basis_to_json(const TensorBasis& b) {
    Json out = Json::array();
    for (const auto& label : b.labels()) {
        Json l = Json::array();
        for (auto [tj, tm] : label) l.push_back(Json::array({tj, tm}));
        out.push_back(std::move(l));
    }
    return out;
}

} // namespace

Json to_json(const RepMatrix& m) {
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(to_json(m.at(r, c)));
    return Json{{"rows", m.rows()},
                {"cols", m.cols()},
                {"order", m.order()},
                {"rowBasis", basis_to_json(m.row_basis())},
                {"colBasis", basis_to_json(m.col_basis())},
                {"entries", std::move(entries)}};
}

Json to_json(const CGTable& t) {
    Json entries = Json::array();
    for (const auto& [key, coeff] : t.entries()) {
        const auto [tj, tm, tm1, tm2] = key;
        entries.push_back(Json{{"twoJ", tj}, {"twoM", tm}, {"twoM1", tm1}, {"twoM2", tm2}, {"coeff", to_json(coeff)}});
    }
    return Json{{"twoJ1", t.j1().two_j},
                {"twoJ2", t.j2().two_j},
                {"deformed", t.deformed()},
                {"order", t.order()},
                {"entries", std::move(entries)}};
}

std::string to_csv(const CGTable& t) {
    std::ostringstream os;
    os.precision(17);
    os << "twoJ,twoM,twoM1,twoM2";
    for (int k = 0; k < t.order(); ++k) os << ",c" << k;
    os << '\n';
    for (const auto& [key, coeff] : t.entries()) {
        const auto [tj, tm, tm1, tm2] = key;
        os << tj << ',' << tm << ',' << tm1 << ',' << tm2;
        for (int k = 0; k < t.order(); ++k) os << ',' << coeff[k];
        os << '\n';
    }
    return os.str();
}

Json to_json(const PlanePoly& p) {
    Json terms = Json::array();
    for (const auto& [key, coeff] : p.terms)
        terms.push_back(Json{{"twoJ", key.first}, {"twoM", key.second}, {"coeff", to_json(coeff)}});
    return Json{{"space", "plane"}, {"basis", "irreducible"}, {"order", p.order}, {"terms", std::move(terms)}};
}

Json to_json(const MonomialPoly& p) {
    Json terms = Json::array();
    for (const auto& [key, coeff] : p.terms)
        terms.push_back(Json{{"k", key.first}, {"l", key.second}, {"coeff", to_json(coeff)}});
    return Json{{"space", "plane"}, {"basis", "monomial"}, {"order", p.order}, {"terms", std::move(terms)}};
}

Json to_json(const Mq2Poly& p) {
    Json terms = Json::array();
    for (const auto& [key, coeff] : p.terms) {
        const auto [tj, tm, tmp, dp] = key;
        terms.push_back(
            Json{{"twoJ", tj}, {"twoM", tm}, {"twoMp", tmp}, {"detPow", dp}, {"coeff", to_json(coeff)}});
    }
    return Json{{"space", "mq2"}, {"order", p.order}, {"terms", std::move(terms)}};
}

PlanePoly plane_poly_from_json(const Json& j) {
    try {
        PlanePoly p(j.at("order").get<int>());
        for (const auto& t : j.at("terms"))
            p.add_term(t.at("twoJ").get<int>(), t.at("twoM").get<int>(), hseries_from_json(t.at("coeff")));
        return p;
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed plane polynomial: ") + e.what());
    }
}

MonomialPoly monomial_poly_from_json(const Json& j) {
    try {
        MonomialPoly p(j.at("order").get<int>());
        for (const auto& t : j.at("terms"))
            p.add_term(t.at("k").get<int>(), t.at("l").get<int>(), hseries_from_json(t.at("coeff")));
        return p;
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed monomial polynomial: ") + e.what());
    }
}

Mq2Poly mq2_poly_from_json(const Json& j) {
    try {
        Mq2Poly p(j.at("order").get<int>());
        for (const auto& t : j.at("terms"))
            p.add_term(t.at("twoJ").get<int>(), t.at("twoM").get<int>(), t.at("twoMp").get<int>(),
                       t.value("detPow", 0), hseries_from_json(t.at("coeff")));
        return p;
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed polynomial: ") + e.what());
    }
}

PlanePoly plane_from_json_any_basis(const Json& j, bool deformed_basis) {
    const std::string basis = j.value("basis", "irreducible");
    if (basis == "monomial") return to_irreducible(monomial_poly_from_json(j), deformed_basis);
    if (basis == "irreducible") return plane_poly_from_json(j);
    throw UsageError("unknown basis '" + basis + "' (expected 'irreducible' or 'monomial')");
}

} // namespace qspace
