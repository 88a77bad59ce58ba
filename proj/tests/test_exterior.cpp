#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biham/exterior.hpp"

#include <vector>

using namespace biham;

namespace {

Poly rpoly(Rng& rng, int nvars, int max_deg, int nterms) {
    Poly p(nvars);
    for (int t = 0; t < nterms; ++t) {
        Exps e(nvars, 0);
        int budget = max_deg;
        for (int k = 0; k < nvars; ++k) {
            int d = static_cast<int>(rng.uniform(0, budget));
            e[k] = d;
            budget -= d;
        }
        p.add_term(std::move(e), rng.rational(6, 3));
    }
    return p;
}

Exterior rform(Rng& rng, int dim, int degree, ExtKind kind, int terms, int maxdeg = 2) {
    Exterior e(dim, degree, kind);
    for (int t = 0; t < terms; ++t) {
        IdxTuple idx;
        while (static_cast<int>(idx.size()) < degree) {
            int cand = static_cast<int>(rng.uniform(0, dim - 1));
            bool dup = false;
            for (int i : idx) dup |= (i == cand);
            if (!dup) idx.push_back(cand);
        }
        e.add_term(std::move(idx), rpoly(rng, dim, maxdeg, 2));
    }
    return e;
}

// independent wedge: split every sorted output tuple into a left/right part
// and accumulate with explicit permutation signs
Exterior oracle_wedge(const Exterior& a, const Exterior& b) {
    Exterior r(a.dim(), a.degree() + b.degree(), a.kind(), a.num_vars());
    int p = a.degree(), m = a.dim();
    int total = p + b.degree();
    if (total > m) return r;
    std::vector<int> sel(total);
    // iterate over all strictly increasing tuples K of length `total`
    std::vector<int> K(total);
    for (int i = 0; i < total; ++i) K[i] = i;
    for (;;) {
        // all p-subsets S of K
        std::vector<int> take(p);
        for (int i = 0; i < p; ++i) take[i] = i;
        bool more_subsets = true;
        while (more_subsets) {
            IdxTuple left, right;
            std::vector<bool> used(total, false);
            for (int i : take) used[i] = true;
            for (int i = 0; i < total; ++i) (used[i] ? left : right).push_back(K[i]);
            IdxTuple concat = left;
            concat.insert(concat.end(), right.begin(), right.end());
            int sign = detail::sort_sign(concat);
            Poly term = a.coeff(left) * b.coeff(right);
            if (!term.is_zero() && sign != 0) {
                IdxTuple key = K;
                r.add_term(std::move(key), sign == 1 ? term : -term);
            }
            // next subset
            int i = p - 1;
            while (i >= 0 && take[i] == total - p + i) --i;
            if (i < 0) {
                more_subsets = false;
            } else {
                ++take[i];
                for (int j = i + 1; j < p; ++j) take[j] = take[j - 1] + 1;
            }
            if (p == 0) more_subsets = false;
        }
        // next tuple K
        int i = total - 1;
        while (i >= 0 && K[i] == m - total + i) --i;
        if (i < 0) break;
        ++K[i];
        for (int j = i + 1; j < total; ++j) K[j] = K[j - 1] + 1;
        if (total == 0) break;
    }
    return r;
}

}  // namespace

TEST_CASE("wedge antisymmetry on coordinate forms") {
    int m = 3;
    Exterior d1 = Exterior::dx(m, 0), d2 = Exterior::dx(m, 1);
    Exterior w12 = wedge(d1, d2), w21 = wedge(d2, d1);
    CHECK(w12 == -w21);
    CHECK(wedge(d1, d1).is_zero());
}

TEST_CASE("wedge of commuting blades: (p12 + p34)^2 = 2 p1234") {
    int m = 4;
    Exterior b(m, 2, ExtKind::MultiVector);
    b.add_term({0, 1}, Poly::constant(m, rat(1)));
    b.add_term({2, 3}, Poly::constant(m, rat(1)));
    Exterior sq = wedge(b, b);
    Exterior expect(m, 4, ExtKind::MultiVector);
    expect.add_term({0, 1, 2, 3}, Poly::constant(m, rat(2)));
    CHECK(sq == expect);
}

TEST_CASE("wedge kind mixing is rejected") {
    Exterior f = Exterior::dx(3, 0), v = Exterior::ddx(3, 1);
    CHECK_THROWS_AS(wedge(f, v), kind_error);
}

TEST_CASE("wedge associativity and graded commutativity vs dense oracle") {
    Rng rng(523);
    for (int rep = 0; rep < 50; ++rep) {
        int m = 4 + static_cast<int>(rng.uniform(0, 2));
        int da = 1 + static_cast<int>(rng.uniform(0, 1));
        int db = 1 + static_cast<int>(rng.uniform(0, 1));
        int dc = 1;
        Exterior a = rform(rng, m, da, ExtKind::Form, 3);
        Exterior b = rform(rng, m, db, ExtKind::Form, 3);
        Exterior c = rform(rng, m, dc, ExtKind::Form, 2);
        CHECK(wedge(a, b) == oracle_wedge(a, b));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        Exterior ba = wedge(b, a);
        Exterior ab = wedge(a, b);
        bool flip = (da * db) % 2 == 1;
        CHECK(ab == (flip ? -ba : ba));
    }
}

TEST_CASE("exterior derivative: d(dP) = 0 and Leibniz") {
    Rng rng(8181);
    for (int rep = 0; rep < 50; ++rep) {
        int m = 3 + static_cast<int>(rng.uniform(0, 3));
        Exterior f(m, 0, ExtKind::Form);
        f.add_term({}, rpoly(rng, m, 3, 4));
        CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
    }
    for (int rep = 0; rep < 25; ++rep) {
        int m = 4;
        Exterior a = rform(rng, m, 1, ExtKind::Form, 2);
        Exterior b = rform(rng, m, 2, ExtKind::Form, 2);
        CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
        CHECK(exterior_derivative(exterior_derivative(b)).is_zero());
        Exterior lhs = exterior_derivative(wedge(a, b));
        Exterior rhs = wedge(exterior_derivative(a), b) - wedge(a, exterior_derivative(b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("top-degree exterior derivative is the canonical zero object") {
    int m = 3;
    VolumeForm vol(m);
    Exterior d = exterior_derivative(vol.as_form());
    CHECK(d.is_zero());
}

TEST_CASE("interior product basics and derivation property") {
    int m = 2;
    Exterior w = wedge(Exterior::dx(m, 0), Exterior::dx(m, 1));
    Exterior i1 = interior_product(Exterior::ddx(m, 0), w);
    CHECK(i1 == Exterior::dx(m, 1));
    Exterior i2 = interior_product(Exterior::ddx(m, 1), w);
    CHECK(i2 == -Exterior::dx(m, 0));

    Rng rng(999);
    for (int rep = 0; rep < 30; ++rep) {
        int mm = 5;
        Exterior X(mm, 1, ExtKind::MultiVector);
        for (int i = 0; i < mm; ++i) X.add_term({i}, rpoly(rng, mm, 1, 1));
        Exterior a = rform(rng, mm, 2, ExtKind::Form, 3);
        Exterior b = rform(rng, mm, 1, ExtKind::Form, 2);
        Exterior lhs = interior_product(X, wedge(a, b));
        Exterior rhs = wedge(interior_product(X, a), b) + wedge(a, interior_product(X, b));
        CHECK(lhs == rhs);  // deg a even would flip the sign; here deg a = 2
    }
}

TEST_CASE("single blade bivector correspondence in dimension 3") {
    int m = 3;
    Exterior omega = Exterior::dx(m, 2);  // dx3
    VolumeForm vol(m);
    Exterior L = bivector_from_form(omega, vol);
    Exterior expect(m, 2, ExtKind::MultiVector);
    expect.add_term({0, 1}, Poly::constant(m, rat(1)));
    CHECK(L == expect);
    CHECK(form_from_bivector(L, vol) == omega);
}

TEST_CASE("bivector <-> form round trips, m = 3..8") {
    Rng rng(4242);
    for (int m = 3; m <= 8; ++m) {
        for (int rep = 0; rep < 8; ++rep) {
            Exterior L = rform(rng, m, 2, ExtKind::MultiVector, 4);
            VolumeForm vol(m, rng.nonzero_rational(5));
            CHECK(bivector_from_form(form_from_bivector(L, vol), vol) == L);
            Exterior w = rform(rng, m, m - 2, ExtKind::Form, 4);
            CHECK(form_from_bivector(bivector_from_form(w, vol), vol) == w);
        }
    }
}

TEST_CASE("defining identity: L(a,b) * Omega = a ^ b ^ omega") {
    Rng rng(31337);
    for (int rep = 0; rep < 20; ++rep) {
        int m = 4 + static_cast<int>(rng.uniform(0, 2));
        Exterior w = rform(rng, m, m - 2, ExtKind::Form, 4);
        VolumeForm vol(m, rng.nonzero_rational(4));
        Exterior L = bivector_from_form(w, vol);
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                Exterior abw = wedge(wedge(Exterior::dx(m, i), Exterior::dx(m, j)), w);
                IdxTuple all(m);
                for (int k = 0; k < m; ++k) all[k] = k;
                CHECK(abw.coeff(all) == L.coeff({i, j}) * vol.coeff);
            }
        }
    }
}

TEST_CASE("zero bivector maps to zero form") {
    VolumeForm vol(5);
    Exterior z = Exterior::multivector(5, 2);
    CHECK(form_from_bivector(z, vol).is_zero());
}

TEST_CASE("hamiltonian field solves i_v Omega = -alpha ^ omega and matches contraction") {
    Rng rng(606);
    for (int rep = 0; rep < 20; ++rep) {
        int m = 5;
        Exterior w = rform(rng, m, m - 2, ExtKind::Form, 4);
        VolumeForm vol(m, rng.nonzero_rational(3));
        Exterior alpha = rform(rng, m, 1, ExtKind::Form, 2);
        Exterior v = hamiltonian_field(alpha, w, vol);
        // defining identity
        Exterior lhs = interior_product(v, vol.as_form());
        Exterior rhs = -wedge(alpha, w);
        CHECK(lhs == rhs);
        // agreement with the bivector contraction
        Exterior L = bivector_from_form(w, vol);
        CHECK(v == contract_bivector(L, alpha));
    }
    // zero 1-form gives the zero field
    Exterior w = rform(rng, 5, 3, ExtKind::Form, 3);
    CHECK(hamiltonian_field(Exterior::form(5, 1), w, VolumeForm(5)).is_zero());
}

TEST_CASE("representative from kernel data: single kernel form in dimension 3") {
    int m = 3;
    Exterior alpha = Exterior::dx(m, 0);
    Exterior beta = wedge(Exterior::dx(m, 1), Exterior::dx(m, 2));
    auto [omega, volf] = representative_from_kernel_data({alpha}, beta);
    CHECK(omega == Exterior::dx(m, 0));
    Exterior expect_vol = wedge(Exterior::dx(m, 0), wedge(Exterior::dx(m, 1), Exterior::dx(m, 2)));
    CHECK(volf == expect_vol);
}

TEST_CASE("representative from kernel data: split symplectic block in dimension 5") {
    int m = 5;
    Exterior alpha = Exterior::dx(m, 0);
    Exterior beta = wedge(Exterior::dx(m, 1), Exterior::dx(m, 2)) + wedge(Exterior::dx(m, 3), Exterior::dx(m, 4));
    auto [omega, volf] = representative_from_kernel_data({alpha}, beta);
    Exterior expect_omega = wedge(Exterior::dx(m, 0), beta) * rat(2);
    CHECK(omega == expect_omega);
    Exterior expect_vol(m, 5, ExtKind::Form);
    expect_vol.add_term({0, 1, 2, 3, 4}, Poly::constant(m, rat(2)));
    CHECK(volf == expect_vol);
}

TEST_CASE("representative from kernel data rejects degenerate input") {
    int m = 3;
    Exterior alpha = Exterior::dx(m, 1);
    Exterior beta = wedge(Exterior::dx(m, 1), Exterior::dx(m, 2));  // alpha ^ beta = 0
    CHECK_THROWS_AS(representative_from_kernel_data({alpha}, beta), precondition_error);
}

TEST_CASE("kernel-restriction oracle for the described bivector") {
    Rng rng(2718);
    int done = 0;
    while (done < 20) {
        int m = (rng.uniform(0, 1) == 0) ? 5 : 7;
        int r = (m == 5) ? 1 : 3;
        int k = (m - r) / 2;
        std::vector<Exterior> alphas;
        QMatrix arows(r, m, Rational(0));
        for (int t = 0; t < r; ++t) {
            Exterior a(m, 1, ExtKind::Form);
            for (int i = 0; i < m; ++i) {
                Rational c = rng.rational(3);
                arows.at(t, i) = c;
                a.add_term({i}, Poly::constant(m, c));
            }
            alphas.push_back(a);
        }
        Exterior beta(m, 2, ExtKind::MultiVector);  // placeholder to build skew matrix
        Exterior beta_form(m, 2, ExtKind::Form);
        QMatrix B(m, m, Rational(0));
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                Rational c = rng.rational(3);
                if (is_zero(c)) continue;
                B.at(i, j) = c;
                B.at(j, i) = -c;
                beta_form.add_term({i, j}, Poly::constant(m, c));
            }
        }
        Exterior prod(m, 0, ExtKind::Form);
        prod.add_term({}, Poly::constant(m, rat(1)));
        for (const auto& a : alphas) prod = wedge(prod, a);
        Exterior volf = wedge(prod, wedge_pow(beta_form, k));
        if (volf.is_zero()) continue;  // retry until nondegenerate
        ++done;

        auto [omega, volf2] = representative_from_kernel_data(alphas, beta_form);
        IdxTuple all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        VolumeForm vol(m, volf2.coeff(all).constant_value());
        Exterior L = bivector_from_form(omega, vol);

        // oracle: kernel of the alpha rows, and the defining pairing
        auto K = qkernel(arows);
        REQUIRE(static_cast<int>(K.size()) == 2 * k);
        // beta(L(dx_l, .), w) = -dx_l(w) for every kernel vector w
        for (int l = 0; l < m; ++l) {
            Exterior v = contract_bivector(L, Exterior::dx(m, l));
            QVec vc(m, Rational(0));
            for (int i = 0; i < m; ++i) vc[i] = v.coeff({i}).constant_value();
            for (const auto& w : K) {
                Rational pair(0);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) pair += vc[i] * B.at(i, j) * w[j];
                CHECK(pair == -w[l]);
            }
        }
        // the kernel forms are Casimirs of L
        for (const auto& a : alphas) CHECK(contract_bivector(L, a).is_zero());
    }
}

TEST_CASE("two_form_rank basics") {
    int m = 4;
    Exterior b1(m, 2, ExtKind::Form);
    b1.add_term({0, 1}, Poly::constant(m, rat(1)));
    CHECK(two_form_rank(b1, QVec(m, Rational(0))) == 2);
    Exterior b2 = b1;
    b2.add_term({2, 3}, Poly::constant(m, rat(1)));
    CHECK(two_form_rank(b2, QVec(m, Rational(0))) == 4);
}

TEST_CASE("symbolic parameters: coefficients may carry extra variables") {
    // forms on 3 coordinates with one symbolic parameter as variable 4
    int m = 3, nv = 4;
    Exterior a = Exterior::dx(m, 0, nv);
    Poly t = Poly::var(nv, 3);
    Exterior w = a * t + Exterior::dx(m, 1, nv);
    Exterior dw = exterior_derivative(w);
    CHECK(dw.is_zero());  // t is not a coordinate, so d kills it
    Exterior f(m, 0, ExtKind::Form, nv);
    f.add_term({}, t * Poly::var(nv, 0));
    Exterior df = exterior_derivative(f);
    Exterior expect(m, 1, ExtKind::Form, nv);
    expect.add_term({0}, t);
    CHECK(df == expect);
}
