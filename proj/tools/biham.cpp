#include "biham/io.hpp"
#include "biham/registry.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace biham;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNonFlat = 10;
constexpr int kExitInapplicable = 20;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;

QVec parse_point(const std::string& s) {
    QVec out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw parse_error("empty coordinate in point '" + s + "'");
            out.push_back(rat_parse(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    return out;
}

// sum of signed terms "coef*label" against the algebra's basis labels
QVec parse_covector(const std::string& expr, const LieAlgebra& L) {
    QVec out(L.dim(), Rational(0));
    std::string s;
    for (char ch : expr)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw parse_error("empty covector expression");
    size_t pos = 0;
    while (pos < s.size()) {
        Rational sign(1);
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        }
        size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw parse_error("dangling sign in '" + expr + "'");
        Rational coef(1);
        std::string label = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coef = rat_parse(term.substr(0, star));
            label = term.substr(star + 1);
        }
        int idx = -1;
        for (int i = 0; i < L.dim(); ++i)
            if (L.labels()[i] == label) idx = i;
        if (idx < 0) throw parse_error("unknown basis label '" + label + "'");
        out[idx] += sign * coef;
        pos = end;
    }
    return out;
}

struct Output {
    bool as_json = false;
    json j;

    explicit Output(const std::string& command) { j["command"] = command; }
    void emit(const std::vector<std::string>& text_lines) const {
        if (as_json) {
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& line : text_lines) std::cout << line << "\n";
        }
    }
};

int run_check(const std::string& path, bool as_json) {
    Output out("check");
    out.as_json = as_json;
    LieAlgebra L = algebra_from_json(load_json_file(path));
    auto rep = jacobi_check(L);
    out.j["dim"] = L.dim();
    out.j["jacobi"] = rep.ok;
    json viols = json::array();
    for (const auto& v : rep.violations) {
        json e;
        e["i"] = v.i + 1;
        e["j"] = v.j + 1;
        e["k"] = v.k + 1;
        e["defect"] = coords_to_json(v.defect);
        viols.push_back(std::move(e));
    }
    out.j["violations"] = std::move(viols);

    std::vector<std::string> lines;
    lines.push_back("dimension: " + std::to_string(L.dim()));
    lines.push_back(std::string("jacobi: ") + (rep.ok ? "ok" : "violated"));
    for (const auto& v : rep.violations)
        lines.push_back("  violated at (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
                        std::to_string(v.k + 1) + "), defect " + qvec_str(v.defect, L.labels()));
    if (rep.ok) {
        auto I0 = unimodular_ideal(L);
        Exterior X = modular_vector(L);
        out.j["unimodular"] = is_unimodular(L);
        out.j["unimodular_ideal_dim"] = I0.size();
        out.j["modular_vector"] = exterior_str(X, coord_names(L.dim()));
        lines.push_back(std::string("unimodular: ") + (is_unimodular(L) ? "yes" : "no"));
        lines.push_back("unimodular ideal dimension: " + std::to_string(I0.size()));
        lines.push_back("modular vector: " + exterior_str(X, coord_names(L.dim())));
    }
    out.emit(lines);
    return rep.ok ? kExitOk : kExitNonFlat;
}

// accepts a bare pencil object or a construct output carrying pencil and
// base_point members
Pencil load_pencil(const json& j, QVec* default_point) {
    if (j.contains("pencil")) {
        if (default_point && j.contains("base_point")) *default_point = coords_from_json(j["base_point"]);
        return pencil_from_json(j["pencil"]);
    }
    return pencil_from_json(j);
}

int run_flatness(const std::string& path, const std::string& point_str, bool as_json) {
    Output out("flatness");
    out.as_json = as_json;
    QVec q;
    Pencil p = load_pencil(load_json_file(path), &q);
    if (!point_str.empty()) q = parse_point(point_str);
    if (q.empty()) throw parse_error("no base point: pass --point or use a file carrying one");
    if (static_cast<int>(q.size()) != p.dim()) throw parse_error("point size does not match the pencil dimension");
    FlatnessReport rep = flatness_test(p, q);
    out.j["report"] = flatness_to_json(rep);
    std::vector<std::string> lines;
    lines.push_back("verdict: " + verdict_name(rep.verdict));
    lines.push_back("reason: " + reason_name(rep.reason));
    if (!rep.detail.empty()) lines.push_back("detail: " + rep.detail);
    if (rep.lambda) {
        std::string l;
        auto names = coord_names(p.dim());
        for (int i = 0; i < p.dim(); ++i) {
            if (rep.lambda->comp[i].is_zero()) continue;
            if (!l.empty()) l += " + ";
            l += "(" + rep.lambda->comp[i].str(names) + ")*dx" + std::to_string(i + 1);
        }
        lines.push_back("lambda: " + (l.empty() ? "0" : l));
        lines.push_back("denominator locus: " + poly_str(rep.denominator_locus, names));
    }
    if (rep.curvature) {
        auto names = coord_names(p.dim());
        std::string c;
        for (const auto& [ij, comp] : rep.curvature->comp) {
            if (comp.is_zero()) continue;
            if (!c.empty()) c += " + ";
            c += "(" + comp.str(names) + ")*dx" + std::to_string(ij.first + 1) + "^dx" + std::to_string(ij.second + 1);
        }
        lines.push_back("curvature: " + (c.empty() ? "0" : c));
    }
    out.emit(lines);
    switch (rep.verdict) {
        case Verdict::Flat: return kExitOk;
        case Verdict::NonFlat: return kExitNonFlat;
        case Verdict::Inapplicable: return kExitInapplicable;
    }
    return kExitInapplicable;
}

int run_genericity(const std::string& path, const std::string& point_str, bool search, std::uint64_t seed,
                   bool as_json) {
    Output out("genericity");
    out.as_json = as_json;
    QVec q;
    Pencil p = load_pencil(load_json_file(path), &q);
    if (search) {
        auto found = find_generic_point(p, 200, seed);
        if (!found) {
            out.j["generic"] = false;
            out.j["searched"] = true;
            out.emit({"no generic point found within the search budget (inconclusive)"});
            return kExitNonFlat;
        }
        q = *found;
    } else {
        if (!point_str.empty()) q = parse_point(point_str);
        if (q.empty()) throw parse_error("no base point: pass --point, --search, or use a file carrying one");
        if (static_cast<int>(q.size()) != p.dim()) throw parse_error("point size does not match the pencil dimension");
    }
    GenericityCertificate cert = generic_at(p, q);
    out.j["certificate"] = certificate_to_json(cert);
    std::vector<std::string> lines;
    std::string pt;
    for (const auto& c : cert.point) pt += (pt.empty() ? "" : ",") + rat_str(c);
    lines.push_back("point: " + pt);
    lines.push_back(std::string("generic: ") + (cert.generic ? "yes" : "no"));
    lines.push_back("gcd of parameter polynomials: " + cert.gcd.str());
    lines.push_back(std::string("leading member nonzero: ") + (cert.leading_ok ? "yes" : "no"));
    out.emit(lines);
    return cert.generic ? kExitOk : kExitNonFlat;
}

int run_classify3_linear(const std::string& path, const std::string& b2s, const std::string& b3s, bool as_json) {
    Output out("classify3 linear");
    out.as_json = as_json;
    LieAlgebra L = algebra_from_json(load_json_file(path));
    auto rep = dim3_linear_classify(L, rat_parse(b2s), rat_parse(b3s));
    out.j["generic_somewhere"] = rep.generic_somewhere;
    out.j["flat"] = rep.flat;
    out.j["quadratic"] = rat_str(rep.quadratic);
    out.j["normalized"] = {{"a22", rat_str(rep.a22)},
                           {"a23", rat_str(rep.a23)},
                           {"a32", rat_str(rep.a32)},
                           {"a33", rat_str(rep.a33)}};
    std::vector<std::string> lines;
    lines.push_back(std::string("generic somewhere: ") + (rep.generic_somewhere ? "yes" : "no"));
    lines.push_back(std::string("flat: ") + (rep.flat ? "yes" : "no"));
    lines.push_back("quadratic value: " + rat_str(rep.quadratic));
    out.emit(lines);
    if (!rep.generic_somewhere) return kExitInapplicable;
    return rep.flat ? kExitOk : kExitNonFlat;
}

int run_classify3_lie(const std::string& path, const std::string& path2, bool as_json) {
    Output out("classify3 lie");
    out.as_json = as_json;
    LieAlgebra A = algebra_from_json(load_json_file(path));
    LieAlgebra B = algebra_from_json(load_json_file(path2));
    auto rep = dim3_lie_classify(A, B);
    out.j["applicable"] = rep.applicable;
    out.j["reason"] = rep.reason;
    out.j["generic_nonflat"] = rep.generic_nonflat;
    if (rep.applicable && rep.reason.empty()) {
        out.j["P"] = poly_to_json(rep.P);
        out.j["Q"] = poly_to_json(rep.Q);
        out.j["normalized"] = {{"a22", rat_str(rep.a22)}, {"a23", rat_str(rep.a23)}, {"a32", rat_str(rep.a32)},
                               {"a33", rat_str(rep.a33)}, {"b", rat_str(rep.b)}};
    }
    std::vector<std::string> lines;
    if (!rep.applicable) {
        lines.push_back("inapplicable: " + rep.reason);
    } else {
        lines.push_back(std::string("generic non-flat: ") + (rep.generic_nonflat ? "yes" : "no"));
        if (!rep.reason.empty()) lines.push_back("note: " + rep.reason);
        if (rep.reason.empty()) {
            lines.push_back("P: " + poly_str(rep.P, coord_names(3)));
            lines.push_back("Q: " + poly_str(rep.Q, coord_names(3)));
        }
    }
    out.emit(lines);
    if (!rep.applicable) return kExitInapplicable;
    return rep.generic_nonflat ? kExitNonFlat : kExitOk;
}

struct ConstructArgs {
    std::string kind;
    int m = 5;
    int n = 2;
    std::string a = "1";
    std::string input, input2, phi_path, alpha, beta;
    std::string output;
};

int run_construct(const ConstructArgs& args, bool as_json) {
    json provenance;
    provenance["construction"] = args.kind;
    json result;

    auto load_algebra = [&](const std::string& path) {
        if (path.empty()) throw parse_error("--input is required for this construction");
        return algebra_from_json(load_json_file(path));
    };

    if (args.kind == "truncated") {
        provenance["params"] = {{"m", args.m}};
        result = algebra_to_json(truncated_algebra(args.m));
    } else if (args.kind == "secondary") {
        LieAlgebra L = load_algebra(args.input);
        provenance["params"] = {{"input_dim", L.dim()}};
        result = algebra_to_json(secondary_algebra(L));
    } else if (args.kind == "affine") {
        provenance["params"] = {{"n", args.n}};
        result = algebra_to_json(affine_algebra(args.n));
    } else if (args.kind == "special-affine") {
        provenance["params"] = {{"n", args.n}};
        result = algebra_to_json(special_affine(args.n));
    } else if (args.kind == "ava") {
        provenance["params"] = {{"n", args.n}, {"a", args.a}};
        result = algebra_to_json(algebra_AVa(args.n, rat_parse(args.a)));
    } else if (args.kind == "product") {
        if (args.input2.empty()) throw parse_error("--input2 is required for products");
        result = algebra_to_json(product_algebra(load_algebra(args.input), algebra_from_json(load_json_file(args.input2))));
        provenance["params"] = json::object();
    } else if (args.kind == "deformed") {
        LieAlgebra L = load_algebra(args.input);
        if (args.phi_path.empty()) throw parse_error("--phi is required for deformations");
        json pj = load_json_file(args.phi_path);
        if (!pj.is_array()) throw parse_error("endomorphism file must be a matrix (array of rows)");
        int m = L.dim();
        QMatrix phi(m, m, Rational(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) phi.at(i, j) = rat_parse(pj.at(i).at(j).get<std::string>());
        provenance["params"] = json::object();
        result = algebra_to_json(deformed_bracket(L, phi));
    } else if (args.kind == "prop4" || args.kind == "prop7") {
        LieAlgebra L = load_algebra(args.input);
        if (args.alpha.empty() || args.beta.empty()) throw parse_error("--alpha and --beta are required");
        QVec alpha = parse_covector(args.alpha, L);
        QVec beta = parse_covector(args.beta, L);
        ConstructedPencil c = args.kind == "prop4" ? prop4_pencil(L, alpha, beta) : prop7_pencil(L, alpha, beta);
        provenance["params"] = {{"alpha", args.alpha}, {"beta", args.beta}};
        result["pencil"] = pencil_to_json(c.pencil);
        result["base_point"] = coords_to_json(c.base_point);
        if (!c.rho.empty()) result["rho"] = coords_to_json(c.rho);
    } else {
        throw parse_error("unknown construction kind '" + args.kind + "'");
    }

    result["provenance"] = std::move(provenance);
    if (args.output.empty()) {
        std::cout << result.dump(2) << "\n";
    } else {
        save_json_file(args.output, result);
        if (as_json) {
            json echo;
            echo["written"] = args.output;
            std::cout << echo.dump(2) << "\n";
        } else {
            std::cout << "wrote " << args.output << "\n";
        }
    }
    return kExitOk;
}

int run_verify(const std::string& case_id, bool all, bool list, bool as_json) {
    const auto& cases = paper_registry();
    if (list) {
        json ids = json::array();
        for (const auto& c : cases) ids.push_back(c.id);
        if (as_json) {
            std::cout << ids.dump(2) << "\n";
        } else {
            for (const auto& c : cases) std::cout << c.id << "  (" << c.provenance << ")\n";
        }
        return kExitOk;
    }
    std::vector<const CaseRecord*> selected;
    if (all) {
        for (const auto& c : cases) selected.push_back(&c);
    } else {
        for (const auto& c : cases)
            if (c.id == case_id) selected.push_back(&c);
        if (selected.empty()) {
            std::cerr << "unknown case id '" << case_id << "'\n";
            return kExitUsage;
        }
    }
    int failures = 0;
    json report = json::array();
    for (const auto* c : selected) {
        for (const auto& f : c->facts) {
            auto t0 = std::chrono::steady_clock::now();
            std::string got;
            try {
                got = f.compute();
            } catch (const std::exception& e) {
                got = std::string("exception: ") + e.what();
            }
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
            bool ok = got == f.expected;
            if (!ok) ++failures;
            if (as_json) {
                json e;
                e["case"] = c->id;
                e["fact"] = f.name;
                e["expected"] = f.expected;
                e["computed"] = got;
                e["pass"] = ok;
                e["ms"] = ms.count();
                report.push_back(std::move(e));
            } else {
                std::cout << (ok ? "pass" : "FAIL") << "  " << c->id << " / " << f.name;
                if (!ok) std::cout << "\n      expected: " << f.expected << "\n      computed: " << got;
                std::cout << "\n";
            }
        }
    }
    if (as_json) std::cout << report.dump(2) << "\n";
    if (!as_json) std::cout << (failures ? "FAILURES: " + std::to_string(failures) : std::string("all facts hold")) << "\n";
    return failures == 0 ? kExitOk : kExitNonFlat;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for pairs of Poisson bivector fields"};
    app.require_subcommand(1);
    bool as_json = false;
    std::uint64_t seed = 12345;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--seed", seed, "seed for randomized searches");

    std::string check_path;
    auto* check = app.add_subcommand("check", "Jacobi, unimodularity and modular data of an algebra file");
    check->add_option("file", check_path)->required();

    std::string flat_path, flat_point;
    auto* flat = app.add_subcommand("flatness", "flatness verdict for a pencil at a base point");
    flat->add_option("file", flat_path)->required();
    flat->add_option("--point", flat_point, "comma-separated rational coordinates");

    std::string gen_path, gen_point;
    bool gen_search = false;
    auto* gen = app.add_subcommand("genericity", "genericity certificate at a point");
    gen->add_option("file", gen_path)->required();
    gen->add_option("--point", gen_point, "comma-separated rational coordinates");
    gen->add_flag("--search", gen_search, "search for a generic point instead");

    ConstructArgs cargs;
    auto* cons = app.add_subcommand("construct", "build a catalog algebra or pencil");
    cons->add_option("kind", cargs.kind,
                     "one of: truncated secondary affine special-affine ava product deformed prop4 prop7")
        ->required();
    cons->add_option("--m", cargs.m);
    cons->add_option("--n", cargs.n);
    cons->add_option("--a", cargs.a);
    cons->add_option("--input", cargs.input);
    cons->add_option("--input2", cargs.input2);
    cons->add_option("--phi", cargs.phi_path);
    cons->add_option("--alpha", cargs.alpha);
    cons->add_option("--beta", cargs.beta);
    cons->add_option("-o,--output", cargs.output);

    std::string verify_case;
    bool verify_all = false, verify_list = false;
    auto* verify = app.add_subcommand("verify-paper", "recompute the golden example registry");
    verify->add_option("--case", verify_case);
    verify->add_flag("--all", verify_all);
    verify->add_flag("--list", verify_list);

    auto* cl3 = app.add_subcommand("classify3", "dimension-3 classifiers");
    cl3->require_subcommand(1);
    std::string lin_path, lin_b2 = "0", lin_b3 = "0";
    auto* lin = cl3->add_subcommand("linear", "linear pair classifier");
    lin->add_option("file", lin_path)->required();
    lin->add_option("--b2", lin_b2)->required();
    lin->add_option("--b3", lin_b3)->required();
    std::string lie_path, lie_path2;
    auto* lie = cl3->add_subcommand("lie", "pair-of-brackets classifier");
    lie->add_option("file", lie_path)->required();
    lie->add_option("file2", lie_path2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) return run_check(check_path, as_json);
        if (*flat) return run_flatness(flat_path, flat_point, as_json);
        if (*gen) return run_genericity(gen_path, gen_point, gen_search, seed, as_json);
        if (*cons) return run_construct(cargs, as_json);
        if (*verify) {
            if (!verify_all && !verify_list && verify_case.empty()) {
                std::cerr << "one of --case, --all, --list is required\n";
                return kExitUsage;
            }
            return run_verify(verify_case, verify_all, verify_list, as_json);
        }
        if (*lin) return run_classify3_linear(lin_path, lin_b2, lin_b3, as_json);
        if (*lie) return run_classify3_lie(lie_path, lie_path2, as_json);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const precondition_error& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const dimension_error& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const value_error& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
