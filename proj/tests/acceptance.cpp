// Acceptance suite: every criterion is exact (byte-equal canonical values,
// zero tolerance) and carries a wall-clock budget. One line per criterion.

#include "biham/catalog.hpp"
#include "biham/flatness.hpp"
#include "biham/io.hpp"
#include "biham/registry.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace biham;

namespace {

QVec pt(std::vector<long> xs) {
    QVec p;
    for (long x : xs) p.push_back(Rational(x));
    return p;
}

struct Criterion {
    int id;
    std::string what;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool check(bool cond, std::string& why, const std::string& msg) {
    if (!cond && why.empty()) why = msg;
    return cond;
}

// --------------------------------------------------------------- criterion 1
bool crit1(std::string& why) {
    Pencil p = catalog::example_a_pencil();
    bool ok = true;

    Exterior omega_expect(5, 3, ExtKind::Form);
    omega_expect.add_term({0, 1, 3}, -Poly::var(5, 2));
    omega_expect.add_term({0, 2, 3}, Poly::var(5, 1));
    omega_expect.add_term({1, 2, 3}, -Poly::var(5, 0));
    omega_expect.add_term({0, 1, 4}, Poly::var(5, 2));
    omega_expect.add_term({1, 2, 4}, Poly::var(5, 1));
    ok &= check(p.omega0() == omega_expect, why, "omega differs from the printed representative");

    Exterior omega1_expect(5, 3, ExtKind::Form);
    omega1_expect.add_term({0, 2, 3}, Poly::var(5, 1));
    omega1_expect.add_term({1, 2, 3}, -Poly::var(5, 0));
    omega1_expect.add_term({0, 2, 4}, -Poly::var(5, 0));
    ok &= check(p.omega1() == omega1_expect, why, "omega1 differs from the printed representative");

    ok &= check(exterior_str(exterior_derivative(p.omega0()), coord_names(5)) ==
                    "-3*dx1^dx2^dx3^dx4 + dx1^dx2^dx3^dx5",
                why, "d omega mismatch");
    ok &= check(exterior_str(exterior_derivative(p.omega1()), coord_names(5)) == "-2*dx1^dx2^dx3^dx4", why,
                "d omega1 mismatch");

    ok &= check(!solve_lambda(p.omega0(), p.omega1()).found, why, "a 1-form solution exists unexpectedly");
    auto rep = flatness_test(p, pt({1, 1, 1, 0, 0}));
    ok &= check(rep.verdict == Verdict::NonFlat, why, "verdict is not non_flat");
    return ok;
}

// --------------------------------------------------------------- criterion 2
bool crit2(std::string& why) {
    Pencil p2 = catalog::example2_pencil();
    QVec q = pt({0, 0, 1, 0, 1});
    bool ok = true;
    ok &= check(generic_at(p2, q).generic, why, "not generic at the base point");
    ok &= check(flatness_test(p2, q).verdict == Verdict::Flat, why, "not flat at the base point");

    for (long a : {1L, 2L}) {
        Exterior shifted = p2.lambda1() + p2.lambda0().eval_at(q) * Rational(a);
        auto ker = casimirs_at(Pencil::raw(p2.lambda0(), shifted), q, std::nullopt);
        ok &= check(ker.size() == 1, why, "shift kernel is not a line");
        if (ker.size() == 1) {
            QVec expect(5, Rational(0));
            expect[1] = Rational(-a);
            expect[3] = Rational(-a * a);
            expect[4] = 1;
            ok &= check(ker[0] == expect, why, "Casimir of the shifted member differs");
            Exterior v = contract_bivector(p2.lambda0(), one_form(ker[0])).eval_at(q);
            Exterior vexpect(5, 1, ExtKind::MultiVector);
            vexpect.add_term({0}, Poly::constant(5, rat(-1)));
            vexpect.add_term({2}, Poly::constant(5, Rational(-a)));
            ok &= check(v == vexpect, why, "pairing field at the base point differs");
        }
        Exterior coc = catalog::example2_cocycle();
        Exterior frozen = p2.lambda0().eval_at(q);
        for (const auto& [idx, c] : frozen.components()) coc.add_term(idx, Poly::constant(5, c.constant_value() * a));
        Pencil shifted_pencil = Pencil::linear_pair(catalog::example2_algebra(), coc);
        ok &= check(flatness_test(shifted_pencil, q).verdict == Verdict::NonFlat, why, "shifted pair is not non_flat");
    }
    return ok;
}

// --------------------------------------------------------------- criterion 3
bool crit3(std::string& why) {
    bool ok = true;
    for (int m : {5, 7}) {
        int n = (m + 1) / 2;
        LieAlgebra T = truncated_algebra(m);

        Exterior dem = ce_d(T, one_form(catalog::basis_covector(m, m - 1)));
        Exterior expect_m(m, 2, ExtKind::Form);
        for (int j = 1; j <= n - 1; ++j)
            expect_m.add_term({j - 1, 2 * n - j - 1}, Poly::constant(m, Rational(-2 * (n - j))));
        ok &= check(dem == expect_m, why, "top differential differs at m=" + std::to_string(m));

        Exterior dem1 = ce_d(T, one_form(catalog::basis_covector(m, m - 2)));
        Exterior expect_m1(m, 2, ExtKind::Form);
        for (int j = 1; j <= n - 1; ++j)
            expect_m1.add_term({j - 1, 2 * n - j - 2}, Poly::constant(m, Rational(-(2 * (n - j) - 1))));
        ok &= check(dem1 == expect_m1, why, "next differential differs at m=" + std::to_string(m));

        Pencil p = catalog::example1_pencil(m);
        QVec q = catalog::basis_covector(m, m - 2);
        ok &= check(generic_at(p, q).generic, why, "not generic at the next-to-top covector");
        auto l3 = lemma3_test(p, q);
        ok &= check(l3.applicable && !l3.flat, why, "proportionality test did not refuse flatness");
        ok &= check(flatness_test(p, q).verdict == Verdict::NonFlat, why, "solver verdict is not non_flat");
    }
    return ok;
}

// --------------------------------------------------------------- criterion 4
bool crit4(std::string& why) {
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
            VolumeForm vol(m);
            Exterior omega = form_from_bivector(lie_poisson(M), vol);
            if (!(exterior_derivative(omega) == interior_product(modular_vector(M), vol.as_form()))) {
                why = "modular identity failed on a catalog frame (dim " + std::to_string(m) + ")";
                return false;
            }
        }
    }
    return true;
}

// --------------------------------------------------------------- criterion 5
bool crit5(std::string& why) {
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
    if (agree != total) {
        why = std::to_string(agree) + "/" + std::to_string(total) + " agreements only";
        return false;
    }
    return true;
}

// --------------------------------------------------------------- criterion 6
bool crit6(std::string& why) {
    bool ok = true;
    // symbolic identity over the five-parameter family
    {
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
        ok &= check(sol.found && sol.unique, why, "normal-form system not uniquely solved");
        if (sol.found) {
            Poly P = a22 * b * x2 * x2 + (a23 * b - a32) * x2 * x3 - a33 * x3 * x3;
            RatFunc f(-(a22 + a33), P);
            ok &= check(sol.lambda.comp[0].is_zero() && sol.lambda.comp[1] == f * RatFunc(-(b * x2)) &&
                            sol.lambda.comp[2] == f * RatFunc(x3),
                        why, "the solved 1-form is not f * omega1");
        }
        Exterior Qf(3, 0, ExtKind::Form, nv);
        Qf.add_term({}, b * x2 * x2 - x3 * x3);
        ok &= check(exterior_derivative(Qf) * rat(-1, 2) == omega1, why, "omega1 is not -(1/2) dQ");
    }
    // eigenvector criterion vs proportionality on 20 instances
    {
        struct Inst {
            Rational a22, a23, a32, a33, b;
        };
        std::vector<Inst> insts;
        insts.push_back({rat(1), rat(0), rat(1), rat(0), rat(0)});  // b = 0, a32 != 0: non-flat
        insts.push_back({rat(1), rat(0), rat(0), rat(1), rat(2)});  // multiple of identity: flat
        insts.push_back({rat(1), rat(0), rat(0), rat(1), rat(0)});
        Rng rng(606060);
        while (insts.size() < 20) {
            Inst i{rng.rational(3), rng.rational(3), rng.rational(3), rng.rational(3), rng.rational(2)};
            if (is_zero(i.a22 + i.a33)) continue;
            insts.push_back(i);
        }
        for (size_t k = 0; k < insts.size(); ++k) {
            const auto& i = insts[k];
            auto rep = dim3_lie_classify(catalog::dim3_linear_algebra(i.a22, i.a23, i.a32, i.a33),
                                         catalog::dim3_lie_second(i.b));
            ok &= check(rep.applicable, why, "classifier refused instance " + std::to_string(k));
            if (rep.applicable)
                ok &= check(rep.generic_nonflat == !poly_proportional(rep.P, rep.Q), why,
                            "eigenvector and proportionality routes disagree");
            if (k == 0) ok &= check(rep.generic_nonflat, why, "b=0, a32!=0 should be non-flat");
            if (k == 1) ok &= check(!rep.generic_nonflat, why, "identity action should be flat");
        }
    }
    return ok;
}

// --------------------------------------------------------------- criterion 7
bool crit7(std::string& why) {
    bool ok = true;
    for (int n : {2, 3, 4}) {
        int m = 2 * n - 1;
        QVec ascalars;
        for (int j = 1; j <= n - 1; ++j) ascalars.push_back(Rational(j));
        Rational fact(1);
        for (int j = 2; j <= n - 1; ++j) fact *= j;

        // closed forms at a generic scalar value
        {
            Rational a = rat(2);
            LieAlgebra L = catalog::example4_algebra(n, a);
            QVec alpha = catalog::example4_alpha(n);
            QVec beta = catalog::example4_beta(n, ascalars);
            int nv = m + 1;
            Poly t = Poly::var(nv, m);
            Exterior tau(m, 1, ExtKind::Form, nv);
            for (int i = 0; i < m; ++i) tau.add_term({i}, Poly::constant(nv, alpha[i]) + t * beta[i]);
            Exterior dtau = ce_d(L, tau);
            Exterior power = wedge_pow(dtau, n - 1);
            auto lin = [&](const Rational& aj) { return Poly::constant(nv, Rational(1)) + t * aj; };
            Exterior expect(m, 2 * n - 2, ExtKind::Form, nv);
            {
                Poly prod = Poly::constant(nv, fact);
                for (const auto& aj : ascalars) prod = prod * lin(aj);
                IdxTuple all;
                for (int i = 0; i < 2 * n - 2; ++i) all.push_back(i);
                expect.add_term(all, prod);
            }
            for (int k = 1; k <= n - 1; ++k) {
                Poly prod = Poly::constant(nv, fact) * t * a;
                for (int j = 1; j <= n - 1; ++j)
                    if (j != k) prod = prod * lin(ascalars[j - 1]);
                IdxTuple idx;
                for (int i = 1; i <= 2 * n - 1; ++i)
                    if (i != 2 * k) idx.push_back(i - 1);
                expect.add_term(idx, prod);
            }
            ok &= check(power == expect, why, "pencil power differs from the closed form at n=" + std::to_string(n));

            Exterior top = wedge(tau, power);
            Exterior expect_top(m, m, ExtKind::Form, nv);
            {
                Poly prod = Poly::constant(nv, fact * (a * Rational(1 - n) + 1)) * t;
                for (const auto& aj : ascalars) prod = prod * lin(aj);
                IdxTuple all;
                for (int i = 0; i < m; ++i) all.push_back(i);
                expect_top.add_term(all, prod);
            }
            ok &= check(top == expect_top, why, "contact polynomial differs from the closed form");

            Exterior bf = one_form(beta);
            Exterior bvol = wedge(bf, wedge_pow(ce_d(L, bf), n - 1));
            Rational coeff = fact * (a * Rational(1 - n) + 1);
            for (const auto& aj : ascalars) coeff *= aj;
            Exterior expect_b(m, m, ExtKind::Form);
            IdxTuple all;
            for (int i = 0; i < m; ++i) all.push_back(i);
            expect_b.add_term(all, Poly::constant(m, coeff));
            ok &= check(bvol == expect_b, why, "contact volume differs from the closed form");
        }

        // accept/reject over the tested scalar values
        std::vector<Rational> tested{rat(-1), rat(1, 2), rat(1), rat(1, n - 1)};
        if (n > 2) tested.push_back(rat(1, n - 2));
        for (const auto& a : tested) {
            LieAlgebra L = catalog::example4_algebra(n, a);
            bool excluded = is_zero(a) || a == rat(1, n - 1) || (n > 2 && a == rat(1, n - 2));
            auto rep = generic_couple_check(L, catalog::example4_alpha(n), catalog::example4_beta(n, ascalars));
            if (rep.generic != !excluded) {
                why = "acceptance set differs at n=" + std::to_string(n) + ", a=" + rat_str(a);
                return false;
            }
        }
    }
    return ok;
}

// --------------------------------------------------------------- criterion 8
bool crit8(std::string& why) {
    bool ok = true;
    for (int m : {5, 7}) {
        int n = (m + 1) / 2;
        QMatrix phi(m, m, Rational(0));
        phi.at(n - 1, m - 1) = 1;
        ok &= check(nijenhuis_torsion(truncated_algebra(m), phi).is_zero(), why, "torsion does not vanish");

        auto [p, L1] = catalog::example8_pencil(m);
        ok &= check(is_unimodular(L1), why, "deformed bracket is not unimodular");
        auto Z = center(L1);
        ok &= check(Z.size() == 1 && !is_zero(Z[0][n - 1]), why, "center is not the middle direction");

        Exterior pw = wedge_pow(p.lambda1(), n - 1);
        bool single = pw.components().size() == 1;
        if (single) {
            const auto& [idx, c] = *pw.components().begin();
            (void)idx;
            Exps xn(m, 0);
            xn[n - 1] = n - 1;
            single = c.term_count() == 1 && c.terms().begin()->first == xn && !is_zero(c.terms().begin()->second);
        }
        ok &= check(single, why, "the power is not a single monomial block");

        QVec q(m, Rational(1));  // x_n != 0 and x_{2n-2} != 0
        ok &= check(generic_at(p, q).generic, why, "not generic on the stated set");
        ok &= check(flatness_test(p, q).verdict == Verdict::NonFlat, why, "not non-flat there");
    }
    return ok;
}

// --------------------------------------------------------------- criterion 9
bool crit9(std::string& why) {
    auto out = prop4_pencil(truncated_algebra(5), catalog::basis_covector(5, 4),
                            catalog::basis_covector(5, 4) + catalog::basis_covector(5, 3));
    bool ok = true;
    ok &= check(out.algebra.dim() == 11, why, "secondary algebra dimension differs");
    ok &= check(rank_at(out.pencil, out.base_point, std::nullopt) == 10, why, "second member rank differs");
    ok &= check(generic_at(out.pencil, out.base_point).generic, why, "not generic at the constructed base point");
    auto l3 = lemma3_test(out.pencil, out.base_point);
    ok &= check(l3.applicable && !l3.flat, why, "proportionality test did not report non-flat");
    return ok;
}

// -------------------------------------------------------------- criterion 10
bool crit10(std::string& why) {
    auto r1 = prop6_rank_suite(2, QVec{rat(1), rat(-1)}, {1, 2});
    auto r2 = prop6_rank_suite(3, QVec{rat(-2), rat(1), rat(1)}, {1, 2});
    bool ok = true;
    ok &= check(r1.rank == 6, why, "distinct-eigenvalue rank is not n^2+n");
    ok &= check(r2.rank == 10, why, "repeated-eigenvalue rank is not n^2+n-2");
    ok &= check(!r2.kernel_inside_sl_plus_v, why, "kernel does not escape the special affine part");
    return ok;
}

// -------------------------------------------------------------- criterion 11
bool crit11(std::string& why) {
    Rng rng(20240101);
    bool ok = true;

    // d after d vanishes
    for (int rep = 0; rep < 30 && ok; ++rep) {
        int m = 3 + static_cast<int>(rng.uniform(0, 3));
        int deg = static_cast<int>(rng.uniform(0, m - 1));
        Exterior w(m, deg, ExtKind::Form);
        for (int tnum = 0; tnum < 3; ++tnum) {
            IdxTuple idx;
            while (static_cast<int>(idx.size()) < deg) {
                int cand = static_cast<int>(rng.uniform(0, m - 1));
                bool dup = false;
                for (int i : idx) dup |= i == cand;
                if (!dup) idx.push_back(cand);
            }
            Poly c(m);
            for (int tt = 0; tt < 3; ++tt) {
                Exps e(m, 0);
                for (int k = 0; k < m; ++k) e[k] = static_cast<std::uint32_t>(rng.uniform(0, 2));
                c.add_term(std::move(e), rng.rational(5, 3));
            }
            w.add_term(std::move(idx), c);
        }
        ok &= check(exterior_derivative(exterior_derivative(w)).is_zero(), why, "d after d missed zero");
    }

    // graded commutativity and associativity
    for (int rep = 0; rep < 25 && ok; ++rep) {
        int m = 5;
        auto rf = [&](int deg) {
            Exterior e(m, deg, ExtKind::Form);
            IdxTuple idx;
            while (static_cast<int>(idx.size()) < deg) {
                int cand = static_cast<int>(rng.uniform(0, m - 1));
                bool dup = false;
                for (int i : idx) dup |= i == cand;
                if (!dup) idx.push_back(cand);
            }
            Poly c(m);
            Exps e0(m, 0);
            e0[static_cast<size_t>(rng.uniform(0, m - 1))] = 1;
            c.add_term(std::move(e0), rng.nonzero_rational(4));
            e.add_term(std::move(idx), c);
            return e;
        };
        int da = 1 + static_cast<int>(rng.uniform(0, 1)), db = 1 + static_cast<int>(rng.uniform(0, 1));
        Exterior a = rf(da), b = rf(db), c = rf(1);
        bool flip = (da * db) % 2 == 1;
        Exterior ab = wedge(a, b), ba = wedge(b, a);
        ok &= check(ab == (flip ? -ba : ba), why, "graded commutativity failed");
        ok &= check(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)), why, "associativity failed");
    }

    // bivector <-> form round trips for every dimension 3..8
    for (int m = 3; m <= 8 && ok; ++m) {
        for (int rep = 0; rep < 5 && ok; ++rep) {
            Exterior L(m, 2, ExtKind::MultiVector);
            for (int tnum = 0; tnum < 4; ++tnum) {
                int i = static_cast<int>(rng.uniform(0, m - 2));
                int j = static_cast<int>(rng.uniform(i + 1, m - 1));
                Poly c(m);
                Exps e0(m, 0);
                e0[static_cast<size_t>(rng.uniform(0, m - 1))] = static_cast<std::uint32_t>(rng.uniform(0, 2));
                c.add_term(std::move(e0), rng.rational(5, 2));
                L.add_term({i, j}, c);
            }
            VolumeForm vol(m, rng.nonzero_rational(3));
            ok &= check(bivector_from_form(form_from_bivector(L, vol), vol) == L, why, "round trip failed");
        }
    }

    // curvature invariance under rescaling by 1 + x1^2
    {
        LieAlgebra L = catalog::dim3_linear_algebra(rat(1), rat(1), rat(0), rat(2));
        Exterior coc(3, 2, ExtKind::Form);
        coc.add_term({0, 1}, Poly::constant(3, rat(2)));
        coc.add_term({0, 2}, Poly::constant(3, rat(-1)));
        Pencil p = Pencil::linear_pair(L, coc);
        Poly u = Poly::constant(3, rat(1)) + Poly::var(3, 0) * Poly::var(3, 0);
        auto s1 = solve_lambda(p.omega0(), p.omega1());
        auto s2 = solve_lambda(p.omega0() * u, p.omega1() * u);
        ok &= check(s1.found && s2.found, why, "rescaled solve failed");
        if (s1.found && s2.found)
            ok &= check(rat_exterior_derivative(s1.lambda) == rat_exterior_derivative(s2.lambda), why,
                        "curvature changed under the unit rescale");
        Pencil p5 = catalog::example2_pencil();
        Poly u5 = Poly::constant(5, rat(1)) + Poly::var(5, 0) * Poly::var(5, 0);
        auto t1 = solve_lambda(p5.omega0(), p5.omega1());
        auto t2 = solve_lambda(p5.omega0() * u5, p5.omega1() * u5);
        ok &= check(t1.found && t2.found &&
                        rat_exterior_derivative(t1.lambda) == rat_exterior_derivative(t2.lambda),
                    why, "five-dimensional curvature changed under the unit rescale");
    }

    // unimodular catalog: reported degenerate subalgebras are never abelian
    {
        LieAlgebra sl2(3);
        sl2.set_bracket(0, 1, QVec{rat(0), rat(2), rat(0)});
        sl2.set_bracket(0, 2, QVec{rat(0), rat(0), rat(-2)});
        sl2.set_bracket(1, 2, QVec{rat(1), rat(0), rat(0)});
        std::vector<LieAlgebra> unimods{sl2, special_affine(2), catalog::example4_algebra(3, rat(-1))};
        for (const auto& L : unimods) {
            if (!is_unimodular(L)) {
                why = "catalog algebra is not unimodular";
                return false;
            }
            int m = L.dim();
            int seen = 0;
            for (int attempt = 0; attempt < 60 && seen < 5; ++attempt) {
                QVec alpha(m), beta(m);
                for (auto& qq : alpha) qq = rng.rational(2);
                for (auto& qq : beta) qq = rng.rational(2);
                auto rep = generic_couple_check(L, alpha, beta);
                if (!rep.forms_generic) continue;
                ++seen;
                for (const auto& d : rep.degenerate_parameters)
                    ok &= check(!d.abelian, why, "abelian subalgebra on a unimodular algebra");
                if (!rep.contact_locus_degenerate)
                    ok &= check(rep.generic, why, "unimodular couple with generic forms was rejected");
            }
            ok &= check(seen > 0, why, "no generic couples sampled");
        }
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "five-dimensional worked pair: representatives, derivatives, no 1-form, non-flat", 1.0, crit1},
        {2, "flat catalog pair, shifted Casimirs and pairings, non-flat shifts", 2.0, crit2},
        {3, "truncated pencils at m = 5, 7: differentials, genericity, two non-flat routes", 10.0, crit3},
        {4, "modular identity over the catalog and 25 random frames each", 30.0, crit4},
        {5, "dimension-3 linear classifier grid vs curvature route, 125 cells", 10.0, crit5},
        {6, "dimension-3 normal form: symbolic 1-form and eigenvector criterion", 5.0, crit6},
        {7, "solvable-family closed forms and couple acceptance set", 10.0, crit7},
        {8, "nilpotent-shift deformation at m = 5, 7: torsion, center, genericity, non-flat", 20.0, crit8},
        {9, "secondary-algebra pencil end-to-end on the truncated algebra", 300.0, crit9},
        {10, "exact ranks of the affine two-forms", 5.0, crit10},
        {11, "property suites: derivations, wedge laws, round trips, invariance, unimodular couples", 60.0, crit11},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs <= c.budget_seconds;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("%s  criterion %2d  (%6.2fs of %6.2fs)  %s%s%s\n", pass ? "PASS" : "FAIL", c.id, secs,
                    c.budget_seconds, c.what.c_str(), why.empty() ? "" : " -- ", why.c_str());
        if (!in_budget && ok) std::printf("      over budget\n");
    }
    if (failures) std::printf("%d criteria failed\n", failures);
    return failures;
}
