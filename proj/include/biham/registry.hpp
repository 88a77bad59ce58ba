#pragma once

#include "biham/catalog.hpp"
#include "biham/constructions.hpp"
#include "biham/flatness.hpp"
#include "biham/io.hpp"

#include <functional>
#include <string>
#include <vector>

namespace biham {

// One recomputable golden fact: the expected string is frozen at build time
// and the closure re-derives the value from scratch.
struct GoldenFact {
    std::string name;
    std::string expected;
    std::function<std::string()> compute;
};

struct CaseRecord {
    std::string id;
    std::string provenance;
    std::vector<GoldenFact> facts;
};

namespace registry_detail {

inline std::string yesno(bool b) { return b ? "true" : "false"; }

inline std::string xstr(const Exterior& e) { return exterior_str(e, coord_names(e.dim())); }

inline QVec parse_point(std::initializer_list<long> xs) {
    QVec p;
    for (long x : xs) p.push_back(Rational(x));
    return p;
}

inline std::string example2_casimir(long a) {
    Pencil p2 = catalog::example2_pencil();
    QVec q = parse_point({0, 0, 1, 0, 1});
    Exterior shifted = p2.lambda1() + p2.lambda0().eval_at(q) * Rational(a);
    auto ker = casimirs_at(Pencil::raw(p2.lambda0(), shifted), q, std::nullopt);
    if (ker.size() != 1) return "kernel is not a line";
    return qvec_str(ker[0], {"dx1", "dx2", "dx3", "dx4", "dx5"});
}

inline std::string example2_shift_verdict(long a) {
    QVec q = parse_point({0, 0, 1, 0, 1});
    Pencil p2 = catalog::example2_pencil();
    Exterior coc = catalog::example2_cocycle();
    Exterior frozen = p2.lambda0().eval_at(q);
    for (const auto& [idx, c] : frozen.components()) coc.add_term(idx, Poly::constant(5, c.constant_value() * a));
    Pencil shifted = Pencil::linear_pair(catalog::example2_algebra(), coc);
    return verdict_name(flatness_test(shifted, q).verdict);
}

inline std::string example2_hamiltonian_of_shift(long a) {
    Pencil p2 = catalog::example2_pencil();
    QVec q = parse_point({0, 0, 1, 0, 1});
    QVec tau(5, Rational(0));
    tau[1] = Rational(-a);
    tau[3] = Rational(-a * a);
    tau[4] = 1;
    Exterior v = contract_bivector(p2.lambda0(), one_form(tau));
    Exterior at = v.eval_at(q);
    return exterior_str(at, coord_names(5));
}

inline std::string sec9_grid() {
    std::vector<LieAlgebra> algebras{
        catalog::dim3_linear_algebra(rat(1), rat(0), rat(0), rat(1)),
        catalog::dim3_linear_algebra(rat(1), rat(0), rat(0), rat(2)),
        catalog::dim3_linear_algebra(rat(1), rat(1), rat(0), rat(1)),
        catalog::dim3_linear_algebra(rat(0), rat(1), rat(-1), rat(1)),
        catalog::dim3_linear_algebra(rat(1), rat(2), rat(3), rat(-4)),
    };
    int total = 0, agree = 0;
    for (const auto& L : algebras) {
        for (long b2 = -2; b2 <= 2; ++b2) {
            for (long b3 = -2; b3 <= 2; ++b3) {
                ++total;
                auto rep = dim3_linear_classify(L, Rational(b2), Rational(b3));
                Exterior coc(3, 2, ExtKind::Form);
                coc.add_term({0, 1}, Poly::constant(3, Rational(b2)));
                coc.add_term({0, 2}, Poly::constant(3, Rational(b3)));
                Pencil p = Pencil::linear_pair(L, coc);
                bool somewhere = !wedge(p.omega0(), p.omega1()).is_zero();
                if (somewhere != rep.generic_somewhere) continue;
                if (!somewhere) {
                    ++agree;
                    continue;
                }
                bool curv_zero = curvature_dim3(p).is_zero();
                if (rep.flat == curv_zero && rep.flat == is_zero(rep.quadratic)) ++agree;
            }
        }
    }
    return std::to_string(agree) + "/" + std::to_string(total);
}

inline std::string sec10_identity() {
    int nv = 8;
    Poly x2 = Poly::var(nv, 1), x3 = Poly::var(nv, 2);
    Poly a22 = Poly::var(nv, 3), a23 = Poly::var(nv, 4), a32 = Poly::var(nv, 5), a33 = Poly::var(nv, 6);
    Poly b = Poly::var(nv, 7);
    Exterior omega(3, 1, ExtKind::Form, nv);
    omega.add_term({1}, -(a32 * x2 + a33 * x3));
    omega.add_term({2}, a22 * x2 + a23 * x3);
    Exterior omega1(3, 1, ExtKind::Form, nv);
    omega1.add_term({1}, -(b * x2));
    omega1.add_term({2}, x3);
    auto sol = solve_lambda(omega, omega1);
    if (!sol.found) return "no solution";
    Poly P = a22 * b * x2 * x2 + (a23 * b - a32) * x2 * x3 - a33 * x3 * x3;
    RatFunc f(-(a22 + a33), P);
    bool ok = sol.lambda.comp[0].is_zero() && sol.lambda.comp[1] == f * RatFunc(-(b * x2)) &&
              sol.lambda.comp[2] == f * RatFunc(x3);
    Exterior Qf(3, 0, ExtKind::Form, nv);
    Qf.add_term({}, b * x2 * x2 - x3 * x3);
    bool pot = exterior_derivative(Qf) * rat(-1, 2) == omega1;
    return yesno(ok) + std::string("/") + yesno(pot);
}

inline std::string prop9_agreement() {
    struct Inst {
        Rational a22, a23, a32, a33, b;
    };
    std::vector<Inst> insts;
    insts.push_back({rat(1), rat(0), rat(1), rat(0), rat(0)});
    insts.push_back({rat(1), rat(0), rat(0), rat(1), rat(0)});
    insts.push_back({rat(1), rat(0), rat(0), rat(1), rat(2)});
    Rng rng(606060);
    while (insts.size() < 20) {
        Inst i{rng.rational(3), rng.rational(3), rng.rational(3), rng.rational(3), rng.rational(2)};
        if (is_zero(i.a22 + i.a33)) continue;  // keep the first bracket non-unimodular
        insts.push_back(i);
    }
    int agree = 0;
    for (const auto& i : insts) {
        LieAlgebra A = catalog::dim3_linear_algebra(i.a22, i.a23, i.a32, i.a33);
        LieAlgebra B = catalog::dim3_lie_second(i.b);
        auto rep = dim3_lie_classify(A, B);
        if (!rep.applicable) continue;
        if (rep.generic_nonflat == !poly_proportional(rep.P, rep.Q)) ++agree;
    }
    return std::to_string(agree) + "/20";
}

inline std::string lemma5_catalog() {
    std::vector<LieAlgebra> cat{truncated_algebra(3),
                                truncated_algebra(5),
                                truncated_algebra(7),
                                catalog::example2_algebra(),
                                catalog::example4_algebra(2, rat(2)),
                                catalog::example4_algebra(3, rat(2)),
                                catalog::example4_algebra(4, rat(2)),
                                affine_algebra(2),
                                special_affine(2),
                                algebra_AVa(2, rat(1)),
                                secondary_algebra(truncated_algebra(3))};
    Rng rng(5005);
    int total = 0, ok = 0;
    for (const auto& L : cat) {
        int m = L.dim();
        for (int rep = 0; rep <= 25; ++rep) {
            LieAlgebra M = L;
            if (rep > 0) {
                QMatrix T(m, m, Rational(0));
                do {
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < m; ++j) T.at(i, j) = rng.rational(2);
                } while (!inverse(T));
                M = change_of_basis(L, T);
            }
            ++total;
            VolumeForm vol(m);
            Exterior omega = form_from_bivector(lie_poisson(M), vol);
            Exterior lhs = exterior_derivative(omega);
            Exterior rhs = interior_product(modular_vector(M), vol.as_form());
            if (lhs == rhs) ++ok;
        }
    }
    return std::to_string(ok) + "/" + std::to_string(total);
}

inline std::string example7_selected_a() {
    int n = 2;
    auto fam = lemma9_families(n);
    detail::Matrix g = detail::zero_matrix(n), h = detail::zero_matrix(n);
    for (int i = 0; i < n; ++i) {
        g[i][i] = fam.a[i];
        h[i][i] = fam.b[i];
    }
    for (long cand : {1L, 3L, 4L, 5L}) {
        Rational a(cand);
        if (a == Rational(n)) continue;  // unimodular case excluded
        LieAlgebra A = algebra_AVa(n, a);
        int d = A.dim();
        QVec alpha1(d, Rational(0)), beta1(d, Rational(0));
        QVec kg = killing_oneform(g, n), kh = killing_oneform(h, n);
        for (int k = 0; k < n * n - 1; ++k) {
            alpha1[1 + k] = kg[k];
            beta1[1 + k] = kh[k];
        }
        for (int j = 0; j < n; ++j) {
            alpha1[n * n + j] = 1;         // tau
            beta1[n * n + j] = fam.c[j];   // mu
        }
        beta1[d - 1] = 1;  // + e*
        if (!contact_check(beta1, A)) continue;
        Exterior da = ce_d(A, one_form(alpha1));
        Exterior db = ce_d(A, one_form(beta1));
        if (!pencil_power_certificate(da, db).generic) continue;
        return rat_str(a);
    }
    return "none";
}

}  // namespace registry_detail

inline const std::vector<CaseRecord>& paper_registry() {
    using namespace registry_detail;
    static const std::vector<CaseRecord> cases = [] {
        std::vector<CaseRecord> out;

        out.push_back(
            {"example-A",
             "worked five-dimensional pair of linear bivector fields",
             {
                 {"d-omega", "-3*dx1^dx2^dx3^dx4 + dx1^dx2^dx3^dx5",
                  [] { return xstr(exterior_derivative(catalog::example_a_pencil().omega0())); }},
                 {"d-omega1", "-2*dx1^dx2^dx3^dx4",
                  [] { return xstr(exterior_derivative(catalog::example_a_pencil().omega1())); }},
                 {"lambda-exists", "false",
                  [] {
                      auto p = catalog::example_a_pencil();
                      return yesno(solve_lambda(p.omega0(), p.omega1()).found);
                  }},
                 {"verdict-at-(1,1,1,0,0)", "non_flat",
                  [] {
                      return verdict_name(
                          flatness_test(catalog::example_a_pencil(), parse_point({1, 1, 1, 0, 0})).verdict);
                  }},
             }});

        auto truncated_case = [](int m) {
            CaseRecord c;
            c.id = "example-1-m" + std::to_string(m);
            c.provenance = "truncated algebra with the top cocycle as second member";
            c.facts = {
                {"d-top", m == 5 ? "-4*dx1^dx5 - 2*dx2^dx4" : "-6*dx1^dx7 - 4*dx2^dx6 - 2*dx3^dx5",
                 [m] {
                     LieAlgebra T = truncated_algebra(m);
                     return xstr(ce_d(T, one_form(catalog::basis_covector(m, m - 1))));
                 }},
                {"d-next", m == 5 ? "-3*dx1^dx4 - dx2^dx3" : "-5*dx1^dx6 - 3*dx2^dx5 - dx3^dx4",
                 [m] {
                     LieAlgebra T = truncated_algebra(m);
                     return xstr(ce_d(T, one_form(catalog::basis_covector(m, m - 2))));
                 }},
                {"generic-at-next-to-top", "true",
                 [m] {
                     return yesno(generic_at(catalog::example1_pencil(m), catalog::basis_covector(m, m - 2)).generic);
                 }},
                {"lemma3-flat", "false",
                 [m] {
                     auto l3 = lemma3_test(catalog::example1_pencil(m), catalog::basis_covector(m, m - 2));
                     return l3.applicable ? yesno(l3.flat) : "inapplicable";
                 }},
                {"verdict", "non_flat",
                 [m] {
                     return verdict_name(flatness_test(catalog::example1_pencil(m), catalog::basis_covector(m, m - 2)).verdict);
                 }},
            };
            return c;
        };
        out.push_back(truncated_case(5));
        out.push_back(truncated_case(7));

        out.push_back(
            {"example-2",
             "solvable five-dimensional algebra with a symplectic-shaped cocycle",
             {
                 {"lie-poisson", "x5*d/dx1^d/dx5 + x3*d/dx2^d/dx3 - x4*d/dx2^d/dx4",
                  [] { return xstr(lie_poisson(catalog::example2_algebra())); }},
                 {"modular-vector", "d/dx1", [] { return xstr(modular_vector(catalog::example2_algebra())); }},
                 {"cocycle", "true",
                  [] { return yesno(is_cocycle(catalog::example2_algebra(), catalog::example2_cocycle())); }},
                 {"generic-at-p", "true",
                  [] { return yesno(generic_at(catalog::example2_pencil(), parse_point({0, 0, 1, 0, 1})).generic); }},
                 {"verdict-at-p", "flat",
                  [] {
                      return verdict_name(flatness_test(catalog::example2_pencil(), parse_point({0, 0, 1, 0, 1})).verdict);
                  }},
                 {"casimir-shift-1", "-dx2 - dx4 + dx5", [] { return example2_casimir(1); }},
                 {"casimir-shift-2", "-2*dx2 - 4*dx4 + dx5", [] { return example2_casimir(2); }},
                 {"hamiltonian-of-shift-1-at-p", "-d/dx1 - d/dx3", [] { return example2_hamiltonian_of_shift(1); }},
                 {"hamiltonian-of-shift-2-at-p", "-d/dx1 - 2*d/dx3", [] { return example2_hamiltonian_of_shift(2); }},
                 {"verdict-shift-1", "non_flat", [] { return example2_shift_verdict(1); }},
                 {"verdict-shift-2", "non_flat", [] { return example2_shift_verdict(2); }},
             }});

        out.push_back(
            {"example-4-n3",
             "solvable family of dimension five with scalar parameter",
             {
                 {"contact-coefficient-a=2", "-12",
                  [] {
                      LieAlgebra L = catalog::example4_algebra(3, rat(2));
                      QVec beta = catalog::example4_beta(3, QVec{rat(1), rat(2)});
                      Exterior bf = one_form(beta);
                      Exterior top = wedge(bf, wedge_pow(ce_d(L, bf), 2));
                      IdxTuple all{0, 1, 2, 3, 4};
                      return rat_str(top.coeff(all).constant_value());
                  }},
                 {"couple-accepts-a=-1", "true",
                  [] {
                      LieAlgebra L = catalog::example4_algebra(3, rat(-1));
                      return yesno(generic_couple_check(L, catalog::example4_alpha(3),
                                                        catalog::example4_beta(3, QVec{rat(1), rat(2)}))
                                       .generic);
                  }},
                 {"couple-accepts-a=1/2", "false",
                  [] {
                      LieAlgebra L = catalog::example4_algebra(3, rat(1, 2));
                      return yesno(generic_couple_check(L, catalog::example4_alpha(3),
                                                        catalog::example4_beta(3, QVec{rat(1), rat(2)}))
                                       .generic);
                  }},
                 {"couple-accepts-a=1", "false",
                  [] {
                      LieAlgebra L = catalog::example4_algebra(3, rat(1));
                      return yesno(generic_couple_check(L, catalog::example4_alpha(3),
                                                        catalog::example4_beta(3, QVec{rat(1), rat(2)}))
                                       .generic);
                  }},
             }});

        out.push_back(
            {"example-5",
             "generic couple on the truncated algebra",
             {
                 {"degenerate-values", "-1,0",
                  [] {
                      auto rep = generic_couple_check(truncated_algebra(5), catalog::basis_covector(5, 4),
                                                      catalog::basis_covector(5, 4) + catalog::basis_covector(5, 3));
                      std::vector<Rational> vals;
                      for (const auto& d : rep.degenerate_parameters)
                          if (d.is_rational && !d.at_infinity) vals.push_back(d.value);
                      std::sort(vals.begin(), vals.end());
                      std::string s;
                      for (const auto& v : vals) s += (s.empty() ? "" : ",") + rat_str(v);
                      return s;
                  }},
                 {"couple-generic", "true",
                  [] {
                      return yesno(generic_couple_check(truncated_algebra(5), catalog::basis_covector(5, 4),
                                                        catalog::basis_covector(5, 4) + catalog::basis_covector(5, 3))
                                       .generic);
                  }},
                 {"top-hamiltonian", "1/4*e1",
                  [] {
                      auto A = subalgebra_A_alpha(truncated_algebra(5), catalog::basis_covector(5, 4));
                      return qvec_str(A.hamiltonian, truncated_algebra(5).labels());
                  }},
                 {"top-kernel", "e3",
                  [] {
                      auto A = subalgebra_A_alpha(truncated_algebra(5), catalog::basis_covector(5, 4));
                      return qvec_str(A.kernel_basis, truncated_algebra(5).labels());
                  }},
                 {"next-hamiltonian", "1/3*e1",
                  [] {
                      auto A = subalgebra_A_alpha(truncated_algebra(5), catalog::basis_covector(5, 3));
                      return qvec_str(A.hamiltonian, truncated_algebra(5).labels());
                  }},
                 {"next-kernel", "e5",
                  [] {
                      auto A = subalgebra_A_alpha(truncated_algebra(5), catalog::basis_covector(5, 3));
                      return qvec_str(A.kernel_basis, truncated_algebra(5).labels());
                  }},
             }});

        out.push_back(
            {"example-6-n2",
             "contact couple on the special affine algebra",
             {
                 {"alpha-contact", "true",
                  [] {
                      auto fam = lemma9_families(2);
                      detail::Matrix g = detail::zero_matrix(2);
                      g[0][0] = fam.a[0];
                      g[1][1] = fam.a[1];
                      LieAlgebra A = special_affine(2);
                      QVec alpha(A.dim(), Rational(0));
                      QVec kg = killing_oneform(g, 2);
                      for (int k = 0; k < 3; ++k) alpha[k] = kg[k];
                      alpha[3] = 1;
                      alpha[4] = 1;
                      return yesno(contact_check(alpha, A));
                  }},
                 {"beta-contact", "true",
                  [] {
                      auto fam = lemma9_families(2);
                      detail::Matrix h = detail::zero_matrix(2);
                      h[0][0] = fam.b[0];
                      h[1][1] = fam.b[1];
                      LieAlgebra A = special_affine(2);
                      QVec beta(A.dim(), Rational(0));
                      QVec kh = killing_oneform(h, 2);
                      for (int k = 0; k < 3; ++k) beta[k] = kh[k];
                      beta[3] = fam.c[0];
                      beta[4] = fam.c[1];
                      return yesno(contact_check(beta, A));
                  }},
                 {"forms-generic", "true",
                  [] {
                      auto fam = lemma9_families(2);
                      detail::Matrix g = detail::zero_matrix(2), h = detail::zero_matrix(2);
                      for (int i = 0; i < 2; ++i) {
                          g[i][i] = fam.a[i];
                          h[i][i] = fam.b[i];
                      }
                      LieAlgebra A = special_affine(2);
                      QVec alpha(A.dim(), Rational(0)), beta(A.dim(), Rational(0));
                      QVec kg = killing_oneform(g, 2), kh = killing_oneform(h, 2);
                      for (int k = 0; k < 3; ++k) {
                          alpha[k] = kg[k];
                          beta[k] = kh[k];
                      }
                      alpha[3] = alpha[4] = 1;
                      beta[3] = fam.c[0];
                      beta[4] = fam.c[1];
                      return yesno(
                          pencil_power_certificate(ce_d(A, one_form(alpha)), ce_d(A, one_form(beta))).generic);
                  }},
             }});

        out.push_back({"example-7-n2",
                       "one-dimensional extension of the affine algebra",
                       {
                           {"d-extension-covector-a=1", "dx1^dx7",
                            [] {
                                LieAlgebra A = algebra_AVa(2, rat(1));
                                return xstr(ce_d(A, one_form(catalog::basis_covector(A.dim(), A.dim() - 1))));
                            }},
                           {"unimodular-a=n", "true", [] { return yesno(is_unimodular(algebra_AVa(2, rat(2)))); }},
                           {"unimodular-a=3", "false", [] { return yesno(is_unimodular(algebra_AVa(2, rat(3)))); }},
                           {"selected-a", "1", [] { return example7_selected_a(); }},
                       }});

        auto example8_case = [](int m) {
            CaseRecord c;
            c.id = "example-8-m" + std::to_string(m);
            c.provenance = "nilpotent-shift deformation of the truncated algebra";
            int n = (m + 1) / 2;
            c.facts = {
                {"torsion-zero", "true",
                 [m, n] {
                     QMatrix phi(m, m, Rational(0));
                     phi.at(n - 1, m - 1) = 1;
                     return yesno(nijenhuis_torsion(truncated_algebra(m), phi).is_zero());
                 }},
                {"deformed-unimodular", "true",
                 [m] { return yesno(is_unimodular(catalog::example8_pencil(m).second)); }},
                {"center", std::string("e") + std::to_string((m + 1) / 2),
                 [m] {
                     auto Z = center(catalog::example8_pencil(m).second);
                     if (Z.size() != 1) return std::string("center is not a line");
                     return qvec_str(Z[0], catalog::example8_pencil(m).second.labels());
                 }},
                {"power-single-term", "true",
                 [m, n] {
                     Exterior pw = wedge_pow(catalog::example8_pencil(m).first.lambda1(), n - 1);
                     if (pw.components().size() != 1) return std::string("false");
                     const auto& [idx, c] = *pw.components().begin();
                     (void)idx;
                     Exps xn(m, 0);
                     xn[n - 1] = n - 1;
                     return yesno(c.term_count() == 1 && c.terms().begin()->first == xn);
                 }},
                {"generic-at-ones", "true",
                 [m] { return yesno(generic_at(catalog::example8_pencil(m).first, QVec(m, Rational(1))).generic); }},
                {"verdict-at-ones", "non_flat",
                 [m] {
                     return verdict_name(flatness_test(catalog::example8_pencil(m).first, QVec(m, Rational(1))).verdict);
                 }},
            };
            return c;
        };
        out.push_back(example8_case(5));
        out.push_back(example8_case(7));

        out.push_back({"sec9-grid",
                       "dimension-3 linear classifier against the curvature route",
                       {
                           {"agreement", "125/125", [] { return sec9_grid(); }},
                       }});

        out.push_back({"sec10-fP",
                       "dimension-3 normal form: symbolic solution and eigenvector criterion",
                       {
                           {"lambda-equals-f-omega1", "true/true", [] { return sec10_identity(); }},
                           {"prop9-agreement", "20/20", [] { return prop9_agreement(); }},
                       }});

        out.push_back(
            {"prop4-truncated5",
             "secondary-algebra pencil over the truncated algebra",
             {
                 {"secondary-dim", "11",
                  [] {
                      auto outp = prop4_pencil(truncated_algebra(5), catalog::basis_covector(5, 4),
                                               catalog::basis_covector(5, 4) + catalog::basis_covector(5, 3));
                      return std::to_string(outp.algebra.dim());
                  }},
                 {"rank-second-member", "10",
                  [] {
                      auto outp = prop4_pencil(truncated_algebra(5), catalog::basis_covector(5, 4),
                                               catalog::basis_covector(5, 4) + catalog::basis_covector(5, 3));
                      return std::to_string(rank_at(outp.pencil, outp.base_point, std::nullopt));
                  }},
                 {"generic-at-base", "true",
                  [] {
                      auto outp = prop4_pencil(truncated_algebra(5), catalog::basis_covector(5, 4),
                                               catalog::basis_covector(5, 4) + catalog::basis_covector(5, 3));
                      return yesno(generic_at(outp.pencil, outp.base_point).generic);
                  }},
                 {"lemma3-flat", "false",
                  [] {
                      auto outp = prop4_pencil(truncated_algebra(5), catalog::basis_covector(5, 4),
                                               catalog::basis_covector(5, 4) + catalog::basis_covector(5, 3));
                      auto l3 = lemma3_test(outp.pencil, outp.base_point);
                      return l3.applicable ? yesno(l3.flat) : "inapplicable";
                  }},
             }});

        out.push_back({"prop6-ranks",
                       "exact ranks of the affine two-forms",
                       {
                           {"distinct-n2", "6",
                            [] { return std::to_string(prop6_rank_suite(2, QVec{rat(1), rat(-1)}, {1, 2}).rank); }},
                           {"repeated-n3", "10",
                            [] {
                                return std::to_string(prop6_rank_suite(3, QVec{rat(-2), rat(1), rat(1)}, {1, 2}).rank);
                            }},
                           {"kernel-escapes", "true",
                            [] {
                                return yesno(!prop6_rank_suite(3, QVec{rat(-2), rat(1), rat(1)}, {1, 2})
                                                  .kernel_inside_sl_plus_v);
                            }},
                       }});

        out.push_back({"lemma5-catalog",
                       "modular identity over the algebra catalog and random frames",
                       {
                           {"identity", "286/286", [] { return lemma5_catalog(); }},
                       }});

        out.push_back({"lemma9-families",
                       "scalar families with controlled collisions",
                       {
                           {"verified-n2-n3-n4", "true",
                            [] {
                                for (int n : {2, 3, 4})
                                    if (!lemma9_verify(lemma9_families(n))) return std::string("false");
                                return std::string("true");
                            }},
                       }});

        return out;
    }();
    return cases;
}

}  // namespace biham
