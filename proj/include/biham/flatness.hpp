#pragma once

#include "biham/exterior.hpp"
#include "biham/matrix.hpp"
#include "biham/pencil.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace biham {

// ---------------------------------------------------------------------------
// the linear system d omega = lambda ^ omega, d omega1 = lambda ^ omega1
// ---------------------------------------------------------------------------

struct LambdaSolution {
    bool found = false;
    bool unique = false;
    RatOneForm lambda;
    Poly denominator_locus;  // product of the distinct solution denominators
    int rank = 0;
    int certificate_row = -1;
};

namespace detail {

// rows of (lambda ^ omega)_J = rhs_J for every (m-1)-tuple J, appended to A/b
inline void append_lambda_equations(const Exterior& omega, const Exterior& rhs, std::vector<std::vector<Poly>>& A,
                                    std::vector<Poly>& b) {
    int m = omega.dim();
    int nv = omega.num_vars();
    std::vector<int> J(m - 1);
    for (int skip = m - 1; skip >= 0; --skip) {
        int t = 0;
        for (int i = 0; i < m; ++i)
            if (i != skip) J[t++] = i;
        std::vector<Poly> row(m, Poly::zero(nv));
        for (int r = 0; r < m - 1; ++r) {
            IdxTuple rest;
            rest.reserve(m - 2);
            for (int s = 0; s < m - 1; ++s)
                if (s != r) rest.push_back(J[s]);
            const Poly& w = omega.coeff(rest);
            if (w.is_zero()) continue;
            row[J[r]] = r % 2 == 0 ? w : -w;
        }
        A.push_back(std::move(row));
        IdxTuple Jt(J.begin(), J.end());
        b.push_back(rhs.coeff(Jt));
    }
}

}  // namespace detail

// Solves both defining identities simultaneously over rational functions.
// Exact: a solution satisfies the identities identically after clearing
// denominators, and uniqueness reflects full column rank over the fraction
// field.
inline LambdaSolution solve_lambda(const Exterior& omega, const Exterior& omega1) {
    if (omega.kind() != ExtKind::Form || omega1.kind() != ExtKind::Form) throw kind_error("representatives are forms");
    int m = omega.dim();
    if (omega1.dim() != m || omega.num_vars() != omega1.num_vars())
        throw dimension_error("representatives do not match");
    if (omega.degree() != m - 2 || omega1.degree() != m - 2)
        throw dimension_error("representatives must have degree dim - 2");
    std::vector<std::vector<Poly>> A;
    std::vector<Poly> b;
    detail::append_lambda_equations(omega, exterior_derivative(omega), A, b);
    detail::append_lambda_equations(omega1, exterior_derivative(omega1), A, b);
    FFSolveResult res = fraction_free_solve(std::move(A), std::move(b));
    LambdaSolution out;
    out.rank = res.rank;
    out.certificate_row = res.certificate_row;
    if (!res.consistent) return out;
    out.found = true;
    out.unique = res.rank == m;
    out.lambda.dim = m;
    out.lambda.comp = std::move(res.solution);
    int nv = omega.num_vars();
    out.denominator_locus = Poly::constant(nv, Rational(1));
    std::vector<Poly> seen;
    for (const auto& c : out.lambda.comp) {
        const Poly& d = c.den();
        if (d.is_constant()) continue;
        bool dup = false;
        for (const auto& s : seen) dup = dup || (s == d);
        if (!dup) {
            seen.push_back(d);
            out.denominator_locus = out.denominator_locus * d;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// flatness verdicts
// ---------------------------------------------------------------------------

enum class Verdict { Flat, NonFlat, Inapplicable };

enum class FlatnessReason {
    NoLambdaSolution,      // dim >= 5, the system is inconsistent
    LambdaFound,           // dim >= 5, solved off the singular locus
    CurvatureZero,         // dim 3
    CurvatureNonzero,      // dim 3
    PreconditionsFailed,
};

inline std::string reason_name(FlatnessReason r) {
    switch (r) {
        case FlatnessReason::NoLambdaSolution: return "no-lambda-solution";
        case FlatnessReason::LambdaFound: return "lambda-found-dim>=5";
        case FlatnessReason::CurvatureZero: return "dlambda=0";
        case FlatnessReason::CurvatureNonzero: return "dlambda!=0";
        case FlatnessReason::PreconditionsFailed: return "criterion-preconditions-failed";
    }
    return "?";
}

struct FlatnessReport {
    Verdict verdict = Verdict::Inapplicable;
    FlatnessReason reason = FlatnessReason::PreconditionsFailed;
    std::string detail;
    std::optional<RatOneForm> lambda;
    Poly denominator_locus;
    std::optional<RatTwoForm> curvature;  // dimension 3 only
};

inline FlatnessReport flatness_test(const Pencil& p, const QVec& point) {
    FlatnessReport rep;
    int m = p.dim();
    rep.denominator_locus = Poly::constant(m, Rational(1));
    if (m % 2 == 0) {
        rep.detail = "even dimension is outside the criterion";
        return rep;
    }
    try {
        auto compat = compatibility_check(p);
        if (!compat.ok) {
            rep.detail = "not a Poisson pair: " + compat.witness;
            return rep;
        }
    } catch (const value_error& e) {
        rep.detail = e.what();
        return rep;
    }
    if (!generic_at(p, point).generic) {
        rep.detail = "the pair is not generic at the base point";
        return rep;
    }

    LambdaSolution sol = solve_lambda(p.omega0(), p.omega1());
    if (m >= 5) {
        if (!sol.found) {
            rep.verdict = Verdict::NonFlat;
            rep.reason = FlatnessReason::NoLambdaSolution;
            return rep;
        }
        rep.lambda = sol.lambda;
        rep.denominator_locus = sol.denominator_locus;
        if (is_zero(sol.denominator_locus.eval(point))) {
            rep.detail = "the solved 1-form is singular at the base point";
            return rep;
        }
        rep.verdict = Verdict::Flat;
        rep.reason = FlatnessReason::LambdaFound;
        return rep;
    }

    // dimension 3: the 1-form always exists for a Poisson pair; the verdict
    // is carried by its exterior derivative
    if (!sol.found) {
        rep.detail = "internal: no 1-form though the pair is compatible";
        return rep;
    }
    rep.lambda = sol.lambda;
    rep.denominator_locus = sol.denominator_locus;
    if (is_zero(sol.denominator_locus.eval(point))) {
        rep.detail = "the solved 1-form is singular at the base point";
        return rep;
    }
    RatTwoForm dl = rat_exterior_derivative(sol.lambda);
    rep.curvature = dl;
    if (dl.is_zero()) {
        rep.verdict = Verdict::Flat;
        rep.reason = FlatnessReason::CurvatureZero;
    } else {
        rep.verdict = Verdict::NonFlat;
        rep.reason = FlatnessReason::CurvatureNonzero;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// the practical proportionality test
// ---------------------------------------------------------------------------

struct Lemma3Report {
    bool applicable = false;
    std::string why_not;
    bool flat = false;
    // first nonvanishing 2x2 minor of (L(alpha, .), X) when non-flat
    std::optional<std::pair<std::pair<int, int>, Poly>> witness;
};

inline Lemma3Report lemma3_test(const Pencil& p, const QVec& point) {
    Lemma3Report rep;
    int m = p.dim();
    if (m < 5 || m % 2 == 0) {
        rep.why_not = "needs odd dimension at least 5";
        return rep;
    }
    Exterior domega1 = exterior_derivative(p.omega1());
    if (!domega1.is_zero()) {
        rep.why_not = "d omega1 does not vanish identically";
        return rep;
    }
    Exterior domega = exterior_derivative(p.omega0());
    // X with i_X Omega = d omega, read off componentwise
    Exterior X = Exterior::multivector(m, 1, domega.num_vars());
    for (int k = 0; k < m; ++k) {
        IdxTuple rest;
        for (int t = 0; t < m; ++t)
            if (t != k) rest.push_back(t);
        const Poly& c = domega.coeff(rest);
        if (c.is_zero()) continue;
        X.add_term({k}, k % 2 == 0 ? c : -c);
    }
    bool X_at_point = false;
    for (int k = 0; k < m; ++k)
        if (!is_zero(X.coeff({k}).eval(point))) X_at_point = true;
    if (!X_at_point) {
        rep.why_not = "d omega vanishes at the base point";
        return rep;
    }
    auto casimirs = constant_casimirs(p.lambda1());
    if (casimirs.empty()) {
        rep.why_not = "no constant Casimir of the second member";
        return rep;
    }
    QVec alpha = casimirs.front();  // constant, hence nonzero at the point
    rep.applicable = true;

    Exterior V = contract_bivector(p.lambda0(), one_form(alpha, p.lambda0().num_vars()));
    rep.flat = true;
    for (int i = 0; i < m && rep.flat; ++i) {
        for (int j = i + 1; j < m && rep.flat; ++j) {
            Poly minor = V.coeff({i}) * X.coeff({j}) - V.coeff({j}) * X.coeff({i});
            if (!minor.is_zero()) {
                rep.flat = false;
                rep.witness = {{i, j}, minor};
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// dimension-3 curvature
// ---------------------------------------------------------------------------

// d of the unique 1-form of a compatible, somewhere-generic pair; checked to
// be representative-independent by recomputation under a unit rescaling
inline RatTwoForm curvature_dim3(const Pencil& p) {
    if (p.dim() != 3) throw dimension_error("curvature form lives in dimension 3");
    auto compat = compatibility_check(p);
    if (!compat.ok) throw precondition_error("not a Poisson pair: " + compat.witness);
    if (wedge(p.omega0(), p.omega1()).is_zero()) throw precondition_error("the pair is nowhere generic");
    LambdaSolution sol = solve_lambda(p.omega0(), p.omega1());
    if (!sol.found) throw precondition_error("no solution of the defining identities");
    RatTwoForm dl = rat_exterior_derivative(sol.lambda);

    int nv = p.omega0().num_vars();
    Poly u = Poly::constant(nv, Rational(1)) + Poly::var(nv, 0) * Poly::var(nv, 0);
    LambdaSolution sol2 = solve_lambda(p.omega0() * u, p.omega1() * u);
    if (!sol2.found) throw value_error("internal: rescaled representative lost the 1-form");
    RatTwoForm dl2 = rat_exterior_derivative(sol2.lambda);
    if (!(dl == dl2)) throw value_error("internal: curvature depends on the representative");
    return dl;
}

// ---------------------------------------------------------------------------
// dimension-3 classifiers
// ---------------------------------------------------------------------------

inline bool poly_proportional(const Poly& P, const Poly& Q) {
    if (Q.is_zero()) return P.is_zero();
    if (P.is_zero()) return true;
    Rational c(0);
    auto it = P.terms().find(Q.leading_exps());
    if (it != P.terms().end()) c = it->second / Q.leading_coeff();
    return P == Q * c;
}

struct Dim3LinearReport {
    bool generic_somewhere = false;
    bool flat = false;
    // the structure constants in the normalized basis
    Rational a22, a23, a32, a33;
    Rational quadratic;  // a32 b2^2 + (a33 - a22) b2 b3 - a23 b3^2
};

namespace detail {

// basis (u, I0-basis) with u the first standard vector outside the ideal
inline QMatrix dim3_normalizer(const LieAlgebra& L) {
    QVec tr = trace_row(L);
    auto I0 = unimodular_ideal(L);
    if (I0.size() != 2) throw precondition_error("unimodular input");
    int u = -1;
    for (int i = 0; i < 3; ++i)
        if (!is_zero(tr[i])) {
            u = i;
            break;
        }
    QMatrix T(3, 3, Rational(0));
    for (int i = 0; i < 3; ++i) {
        T.at(i, 0) = i == u ? Rational(1) : Rational(0);
        T.at(i, 1) = I0[0][i];
        T.at(i, 2) = I0[1][i];
    }
    return T;
}

}  // namespace detail

inline Dim3LinearReport dim3_linear_classify(const LieAlgebra& L, const Rational& b2, const Rational& b3) {
    if (L.dim() != 3) throw dimension_error("three-dimensional algebras only");
    if (!jacobi_check(L).ok) throw precondition_error("not a Lie algebra");
    if (is_unimodular(L)) throw precondition_error("unimodular input");
    LieAlgebra N = change_of_basis(L, detail::dim3_normalizer(L));
    QVec c12 = N.bracket_basis(0, 1), c13 = N.bracket_basis(0, 2);
    Dim3LinearReport rep;
    rep.a22 = c12[1];
    rep.a23 = c12[2];
    rep.a32 = c13[1];
    rep.a33 = c13[2];
    rep.quadratic = rep.a32 * b2 * b2 + (rep.a33 - rep.a22) * b2 * b3 - rep.a23 * b3 * b3;
    rep.flat = is_zero(rep.quadratic);
    Rational g2 = rep.a22 * b3 - rep.a32 * b2;
    Rational g3 = rep.a23 * b3 - rep.a33 * b2;
    rep.generic_somewhere = !(is_zero(g2) && is_zero(g3));
    return rep;
}

// aggregate existence statement: some constant second member yields a
// generic non-flat pair iff the ideal action is not a multiple of identity
inline bool dim3_nonflat_choice_exists(const LieAlgebra& L) {
    LieAlgebra N = change_of_basis(L, detail::dim3_normalizer(L));
    QVec c12 = N.bracket_basis(0, 1), c13 = N.bracket_basis(0, 2);
    return !(is_zero(c12[2]) && is_zero(c13[1]) && c12[1] == c13[2]);
}

struct Dim3LieReport {
    bool applicable = false;
    std::string reason;
    bool swapped = false;          // members exchanged to make the first non-unimodular
    bool shared_ideal = true;      // the two unimodular ideals coincide
    bool generic_nonflat = false;  // the eigenvector criterion
    LieAlgebra first, second;      // the reduced pair in the normalized basis
    Rational a22, a23, a32, a33, b;
    Poly P, Q;  // genericity polynomial and the potential of the second form
};

inline Dim3LieReport dim3_lie_classify(const LieAlgebra& L0, const LieAlgebra& L1) {
    Dim3LieReport rep;
    if (L0.dim() != 3 || L1.dim() != 3) throw dimension_error("three-dimensional algebras only");
    if (!jacobi_check(L0).ok || !jacobi_check(L1).ok || !jacobi_check(sum_algebra(L0, L1)).ok) {
        rep.reason = "incompatible pair of brackets";
        return rep;
    }
    QVec t0 = trace_row(L0), t1 = trace_row(L1);
    if (is_zero(t0) && is_zero(t1)) {
        rep.reason = "both brackets unimodular";
        return rep;
    }
    LieAlgebra A = L0, B = L1;
    if (is_zero(t0)) {
        std::swap(A, B);
        std::swap(t0, t1);
        rep.swapped = true;
    }
    rep.applicable = true;
    // make the second bracket unimodular: t0 + kappa-free linear combination
    if (!is_zero(t1)) {
        QMatrix tr2(2, 3, Rational(0));
        for (int i = 0; i < 3; ++i) {
            tr2.at(0, i) = t0[i];
            tr2.at(1, i) = t1[i];
        }
        if (qrank(tr2) == 2) {
            // distinct unimodular ideals: the pair is flat wherever generic
            rep.shared_ideal = false;
            rep.generic_nonflat = false;
            rep.reason = "distinct unimodular ideals";
            return rep;
        }
        int i0 = -1;
        for (int i = 0; i < 3; ++i)
            if (!is_zero(t0[i])) {
                i0 = i;
                break;
            }
        Rational kappa = t1[i0] / t0[i0];
        B = combine_brackets(A, -kappa, B, Rational(1));
    }
    bool second_zero = B.structure_constants().empty();
    if (second_zero) {
        rep.generic_nonflat = false;
        rep.reason = "the second bracket is a multiple of the first";
        return rep;
    }

    auto I0 = unimodular_ideal(A);
    if (I0.size() != 2) throw value_error("internal: unimodular ideal is not a plane");
    // the ideal must be an abelian ideal for the unimodular bracket too
    QMatrix Imat(2, 3, Rational(0));
    for (int i = 0; i < 3; ++i) {
        Imat.at(0, i) = I0[0][i];
        Imat.at(1, i) = I0[1][i];
    }
    auto inside = [&](const QVec& v) {
        QMatrix three(3, 3, Rational(0));
        for (int i = 0; i < 3; ++i) {
            three.at(0, i) = I0[0][i];
            three.at(1, i) = I0[1][i];
            three.at(2, i) = v[i];
        }
        return qrank(three) == 2;
    };
    if (!is_zero(B.bracket(I0[0], I0[1]))) {
        rep.applicable = false;
        rep.reason = "the shared ideal is not abelian for the second bracket";
        return rep;
    }

    // cyclic basis of the ideal for the unimodular action
    QVec tr = trace_row(A);
    int u = -1;
    for (int i = 0; i < 3; ++i)
        if (!is_zero(tr[i])) {
            u = i;
            break;
        }
    QVec e1(3, Rational(0));
    e1[u] = 1;
    QVec cands[3] = {I0[0], I0[1], I0[0] + I0[1]};
    QVec e2, e3;
    bool found = false;
    for (const auto& w : cands) {
        QVec bw = B.bracket(e1, w);
        if (!inside(bw)) {
            rep.applicable = false;
            rep.reason = "the second bracket does not preserve the shared ideal";
            return rep;
        }
        QMatrix two(2, 3, Rational(0));
        for (int i = 0; i < 3; ++i) {
            two.at(0, i) = w[i];
            two.at(1, i) = bw[i];
        }
        if (qrank(two) == 2) {
            e2 = w;
            e3 = bw;
            found = true;
            break;
        }
    }
    if (!found) {
        rep.generic_nonflat = false;
        rep.reason = "the unimodular action on the ideal is trivial";
        return rep;
    }
    QMatrix T(3, 3, Rational(0));
    for (int i = 0; i < 3; ++i) {
        T.at(i, 0) = e1[i];
        T.at(i, 1) = e2[i];
        T.at(i, 2) = e3[i];
    }
    rep.first = change_of_basis(A, T);
    rep.second = change_of_basis(B, T);

    QVec c12 = rep.first.bracket_basis(0, 1), c13 = rep.first.bracket_basis(0, 2);
    rep.a22 = c12[1];
    rep.a23 = c12[2];
    rep.a32 = c13[1];
    rep.a33 = c13[2];
    QVec d13 = rep.second.bracket_basis(0, 2);
    rep.b = d13[1];
    if (!is_zero(d13[2]) || !(rep.second.bracket_basis(0, 1) == QVec{Rational(0), Rational(0), Rational(1)}))
        throw value_error("internal: cyclic normalization failed");

    Poly x2 = Poly::var(3, 1), x3 = Poly::var(3, 2);
    rep.P = x2 * x2 * (rep.a22 * rep.b) + x2 * x3 * (rep.a23 * rep.b - rep.a32) - x3 * x3 * rep.a33;
    rep.Q = x2 * x2 * rep.b - x3 * x3;

    // eigenvector criterion for the two ideal actions
    if (is_zero(rep.b)) {
        rep.generic_nonflat = !is_zero(rep.a32);
    } else {
        rep.generic_nonflat = !(rep.a22 == rep.a33 && rep.a32 == rep.a23 * rep.b);
    }
    return rep;
}

}  // namespace biham
