#pragma once

#include "biham/exterior.hpp"
#include "biham/flatness.hpp"
#include "biham/liealg.hpp"
#include "biham/pencil.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace biham {

using nlohmann::json;

// ---------------------------------------------------------------------------
// polynomials
// ---------------------------------------------------------------------------

inline json poly_to_json(const Poly& p) {
    json terms = json::array();
    // leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json t;
        t["exp"] = it->first;
        t["coef"] = rat_str(it->second);
        terms.push_back(std::move(t));
    }
    return terms;
}

inline Poly poly_from_json(const json& j, int nvars) {
    if (!j.is_array()) throw parse_error("polynomial must be an array of terms");
    Poly p(nvars);
    for (const auto& t : j) {
        if (!t.contains("exp") || !t.contains("coef")) throw parse_error("term needs exp and coef");
        Exps e = t["exp"].get<Exps>();
        if (static_cast<int>(e.size()) != nvars) throw parse_error("exponent vector length mismatch");
        p.add_term(std::move(e), rat_parse(t["coef"].get<std::string>()));
    }
    return p;
}

inline json ratfunc_to_json(const RatFunc& f) {
    json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

inline json unipoly_to_json(const UniPoly& u) {
    json c = json::array();
    for (const auto& q : u.coeffs()) c.push_back(rat_str(q));
    return c;
}

// ---------------------------------------------------------------------------
// exterior objects: 1-based indices on the wire
// ---------------------------------------------------------------------------

inline json exterior_to_json(const Exterior& e) {
    json j;
    j["dim"] = e.dim();
    j["degree"] = e.degree();
    j["kind"] = e.kind() == ExtKind::Form ? "form" : "multivector";
    if (e.num_vars() != e.dim()) j["vars"] = e.num_vars();
    json terms = json::array();
    for (const auto& [idx, c] : e.components()) {
        json t;
        std::vector<int> one_based;
        for (int i : idx) one_based.push_back(i + 1);
        t["idx"] = one_based;
        t["poly"] = poly_to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline Exterior exterior_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("degree") || !j.contains("kind"))
        throw parse_error("exterior object needs dim, degree, kind");
    try {
        int dim = j["dim"].get<int>();
        int degree = j["degree"].get<int>();
        std::string kind = j["kind"].get<std::string>();
        if (kind != "form" && kind != "multivector") throw parse_error("kind must be form or multivector");
        int nvars = j.contains("vars") ? j["vars"].get<int>() : dim;
        Exterior e(dim, degree, kind == "form" ? ExtKind::Form : ExtKind::MultiVector, nvars);
        if (j.contains("terms")) {
            for (const auto& t : j["terms"]) {
                IdxTuple idx;
                for (int i : t["idx"].get<std::vector<int>>()) idx.push_back(i - 1);
                e.add_term(std::move(idx), poly_from_json(t["poly"], nvars));
            }
        }
        return e;
    } catch (const dimension_error& e) {
        throw parse_error(std::string("bad exterior object: ") + e.what());
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad exterior object: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// algebras: brackets listed for i < j, 1-based; omitted pairs vanish
// ---------------------------------------------------------------------------

inline json algebra_to_json(const LieAlgebra& L) {
    json j;
    j["dim"] = L.dim();
    j["basis"] = L.labels();
    json brackets = json::array();
    for (const auto& [ij, c] : L.structure_constants()) {
        json b;
        b["i"] = ij.first + 1;
        b["j"] = ij.second + 1;
        json coeffs = json::object();
        for (int k = 0; k < L.dim(); ++k)
            if (!is_zero(c[k])) coeffs[std::to_string(k + 1)] = rat_str(c[k]);
        b["coeffs"] = std::move(coeffs);
        brackets.push_back(std::move(b));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

inline LieAlgebra algebra_from_json(const json& j) {
    if (!j.contains("dim")) throw parse_error("algebra needs a dim field");
    try {
        int dim = j["dim"].get<int>();
        std::vector<std::string> labels;
        if (j.contains("basis")) labels = j["basis"].get<std::vector<std::string>>();
        LieAlgebra L(dim, std::move(labels));
        if (j.contains("brackets")) {
            for (const auto& b : j["brackets"]) {
                int i = b["i"].get<int>() - 1;
                int jj = b["j"].get<int>() - 1;
                QVec c(dim, Rational(0));
                for (const auto& [key, val] : b["coeffs"].items()) {
                    int k = std::stoi(key) - 1;
                    if (k < 0 || k >= dim) throw parse_error("bracket target '" + key + "' out of range");
                    c[k] = rat_parse(val.get<std::string>());
                }
                L.set_bracket(i, jj, std::move(c));
            }
        }
        return L;
    } catch (const dimension_error& e) {
        throw parse_error(std::string("bad algebra file: ") + e.what());
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad algebra file: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw parse_error("bad algebra file: non-numeric bracket key");
    }
}

inline json coords_to_json(const QVec& v) {
    json c = json::array();
    for (const auto& q : v) c.push_back(rat_str(q));
    return json{{"coords", std::move(c)}};
}

inline QVec coords_from_json(const json& j) {
    const json& arr = j.contains("coords") ? j["coords"] : j;
    if (!arr.is_array()) throw parse_error("coordinates must be an array");
    QVec v;
    for (const auto& s : arr) v.push_back(rat_parse(s.get<std::string>()));
    return v;
}

// ---------------------------------------------------------------------------
// pencils
// ---------------------------------------------------------------------------

inline json pencil_to_json(const Pencil& p) {
    json j;
    j["dim"] = p.dim();
    j["kind"] = pencil_kind_name(p.kind());
    j["algebra"] = p.algebra() ? algebra_to_json(*p.algebra()) : json(nullptr);
    j["cocycle"] = p.cocycle() ? exterior_to_json(*p.cocycle()) : json(nullptr);
    j["algebra2"] = p.algebra2() ? algebra_to_json(*p.algebra2()) : json(nullptr);
    if (p.kind() == PencilKind::Raw) {
        j["lambda0"] = exterior_to_json(p.lambda0());
        j["lambda1"] = exterior_to_json(p.lambda1());
    }
    return j;
}

inline Pencil pencil_from_json(const json& j) {
    std::string kind = j.value("kind", "");
    if (kind == "linear_pair") {
        return Pencil::linear_pair(algebra_from_json(j.at("algebra")), exterior_from_json(j.at("cocycle")));
    }
    if (kind == "lie_pair") {
        return Pencil::lie_pair(algebra_from_json(j.at("algebra")), algebra_from_json(j.at("algebra2")));
    }
    if (kind == "raw") {
        return Pencil::raw(exterior_from_json(j.at("lambda0")), exterior_from_json(j.at("lambda1")));
    }
    throw parse_error("pencil kind must be linear_pair, lie_pair or raw");
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

inline json certificate_to_json(const GenericityCertificate& c) {
    json j;
    j["point"] = coords_to_json(c.point);
    json tp = json::array();
    for (const auto& u : c.t_polynomials) tp.push_back(unipoly_to_json(u));
    j["t_polynomials"] = std::move(tp);
    j["gcd"] = unipoly_to_json(c.gcd);
    j["leading_ok"] = c.leading_ok;
    j["generic"] = c.generic;
    return j;
}

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Flat: return "flat";
        case Verdict::NonFlat: return "non_flat";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

inline json flatness_to_json(const FlatnessReport& r) {
    json j;
    j["verdict"] = verdict_name(r.verdict);
    j["reason"] = reason_name(r.reason);
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.lambda) {
        json comps = json::array();
        for (const auto& c : r.lambda->comp) comps.push_back(ratfunc_to_json(c));
        j["lambda"] = std::move(comps);
    } else {
        j["lambda"] = nullptr;
    }
    j["denominator_locus"] = poly_to_json(r.denominator_locus);
    if (r.curvature) {
        json comps = json::array();
        for (const auto& [ij, c] : r.curvature->comp) {
            json e;
            e["i"] = ij.first + 1;
            e["j"] = ij.second + 1;
            e["num"] = poly_to_json(c.num());
            e["den"] = poly_to_json(c.den());
            comps.push_back(std::move(e));
        }
        j["curvature"] = std::move(comps);
    } else {
        j["curvature"] = nullptr;
    }
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw parse_error("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw value_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace biham
