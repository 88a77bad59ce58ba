#pragma once

#include "biham/exterior.hpp"
#include "biham/liealg.hpp"
#include "biham/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace biham {

enum class PencilKind { LinearPair, LiePair, Raw };

inline std::string pencil_kind_name(PencilKind k) {
    switch (k) {
        case PencilKind::LinearPair: return "linear_pair";
        case PencilKind::LiePair: return "lie_pair";
        case PencilKind::Raw: return "raw";
    }
    return "?";
}

// a constant 2-form on the algebra, seen as a constant bivector on the dual
inline Exterior cocycle_to_bivector(const Exterior& beta, int nvars = -1) {
    if (beta.kind() != ExtKind::Form || beta.degree() != 2) throw kind_error("expected a 2-form");
    int m = beta.dim();
    Exterior r = Exterior::multivector(m, 2, nvars < 0 ? m : nvars);
    for (const auto& [idx, c] : beta.components()) r.add_term(idx, Poly::constant(r.num_vars(), c.constant_value()));
    return r;
}

// A pair of bivector fields with its cached representative forms against the
// unit volume dx1 ^ ... ^ dxm.
class Pencil {
public:
    static Pencil linear_pair(LieAlgebra L, Exterior cocycle) {
        Pencil p;
        p.kind_ = PencilKind::LinearPair;
        p.dim_ = L.dim();
        if (cocycle.dim() != p.dim_) throw dimension_error("cocycle dimension mismatch");
        p.lambda0_ = lie_poisson(L);
        p.lambda1_ = cocycle_to_bivector(cocycle);
        p.alg_ = std::move(L);
        p.cocycle_ = std::move(cocycle);
        p.cache_forms();
        return p;
    }

    static Pencil lie_pair(LieAlgebra L, LieAlgebra L1) {
        Pencil p;
        p.kind_ = PencilKind::LiePair;
        if (L.dim() != L1.dim()) throw dimension_error("the two algebras must share the space");
        p.dim_ = L.dim();
        p.lambda0_ = lie_poisson(L);
        p.lambda1_ = lie_poisson(L1);
        p.alg_ = std::move(L);
        p.alg2_ = std::move(L1);
        p.cache_forms();
        return p;
    }

    static Pencil raw(Exterior lambda0, Exterior lambda1) {
        Pencil p;
        p.kind_ = PencilKind::Raw;
        if (lambda0.kind() != ExtKind::MultiVector || lambda0.degree() != 2 || lambda1.kind() != ExtKind::MultiVector ||
            lambda1.degree() != 2)
            throw kind_error("raw pencil needs two bivector fields");
        if (lambda0.dim() != lambda1.dim() || lambda0.num_vars() != lambda1.num_vars())
            throw dimension_error("bivector fields do not match");
        p.dim_ = lambda0.dim();
        p.lambda0_ = std::move(lambda0);
        p.lambda1_ = std::move(lambda1);
        p.cache_forms();
        return p;
    }

    int dim() const { return dim_; }
    PencilKind kind() const { return kind_; }
    const Exterior& lambda0() const { return lambda0_; }
    const Exterior& lambda1() const { return lambda1_; }
    const Exterior& omega0() const { return omega0_; }
    const Exterior& omega1() const { return omega1_; }
    const std::optional<LieAlgebra>& algebra() const { return alg_; }
    const std::optional<LieAlgebra>& algebra2() const { return alg2_; }
    const std::optional<Exterior>& cocycle() const { return cocycle_; }

    Exterior member_at(const QVec& point, const std::optional<Rational>& t) const {
        Exterior a = lambda0_.eval_at(point);
        Exterior b = lambda1_.eval_at(point);
        if (!t) return b;  // t = infinity
        return a + b * *t;
    }

private:
    void cache_forms() {
        VolumeForm vol(dim_);
        omega0_ = form_from_bivector(lambda0_, vol);
        omega1_ = form_from_bivector(lambda1_, vol);
    }

    int dim_ = 0;
    PencilKind kind_ = PencilKind::Raw;
    std::optional<LieAlgebra> alg_, alg2_;
    std::optional<Exterior> cocycle_;
    Exterior lambda0_, lambda1_, omega0_, omega1_;
};

// the spelled-out reparametrization (1-a) L0 + a L1, (1-a1) L0 + a1 L1;
// scalars are always caller-supplied
inline Pencil reparametrized(const Pencil& p, const Rational& a, const Rational& a1) {
    if (a == a1) throw value_error("reparametrization scalars must differ");
    Exterior n0 = p.lambda0() * (Rational(1) - a) + p.lambda1() * a;
    Exterior n1 = p.lambda0() * (Rational(1) - a1) + p.lambda1() * a1;
    return Pencil::raw(std::move(n0), std::move(n1));
}

struct CompatibilityReport {
    bool ok = false;
    std::string witness;  // describes the failing object when not ok
};

inline CompatibilityReport compatibility_check(const Pencil& p) {
    CompatibilityReport rep;
    switch (p.kind()) {
        case PencilKind::LinearPair: {
            auto j = jacobi_check(*p.algebra());
            if (!j.ok) {
                rep.witness = "bracket fails the Jacobi identity";
                return rep;
            }
            if (!is_cocycle(*p.algebra(), *p.cocycle())) {
                rep.witness = "the constant 2-form is not a cocycle";
                return rep;
            }
            rep.ok = true;
            return rep;
        }
        case PencilKind::LiePair: {
            if (!jacobi_check(*p.algebra()).ok) {
                rep.witness = "first bracket fails the Jacobi identity";
                return rep;
            }
            if (!jacobi_check(*p.algebra2()).ok) {
                rep.witness = "second bracket fails the Jacobi identity";
                return rep;
            }
            if (!jacobi_check(sum_algebra(*p.algebra(), *p.algebra2())).ok) {
                rep.witness = "sum bracket fails the Jacobi identity";
                return rep;
            }
            rep.ok = true;
            return rep;
        }
        case PencilKind::Raw: {
            if (p.dim() != 3)
                throw value_error("raw-kind compatibility is only decided in dimension 3");
            auto integrable = [&](const Exterior& w) { return wedge(w, exterior_derivative(w)).is_zero(); };
            if (!integrable(p.omega0())) {
                rep.witness = "omega ^ d omega != 0";
                return rep;
            }
            if (!integrable(p.omega1())) {
                rep.witness = "omega1 ^ d omega1 != 0";
                return rep;
            }
            if (!integrable(p.omega0() + p.omega1())) {
                rep.witness = "(omega + omega1) ^ d(omega + omega1) != 0";
                return rep;
            }
            rep.ok = true;
            return rep;
        }
    }
    return rep;
}

// rank of (L0 + t L1)(point); t absent means the t = infinity member
inline int rank_at(const Pencil& p, const QVec& point, const std::optional<Rational>& t) {
    Exterior W = p.member_at(point, t);
    return two_form_rank(W, QVec(p.dim(), Rational(0)));
}

struct GenericityCertificate {
    QVec point;
    std::vector<UniPoly> t_polynomials;
    UniPoly gcd;
    bool leading_ok = false;
    bool generic = false;
};

inline GenericityCertificate generic_at(const Pencil& p, const QVec& point) {
    if (p.dim() % 2 == 0) throw dimension_error("genericity analysis needs odd dimension");
    Exterior A = p.lambda0().eval_at(point);
    Exterior B = p.lambda1().eval_at(point);
    PencilPowerCertificate c = pencil_power_certificate(A, B);
    GenericityCertificate out;
    out.point = point;
    out.t_polynomials = std::move(c.t_polynomials);
    out.gcd = std::move(c.gcd);
    out.leading_ok = c.leading_ok;
    out.generic = c.generic;
    return out;
}

// random search over small-denominator rational points; a miss after the
// budget is inconclusive
inline std::optional<QVec> find_generic_point(const Pencil& p, int budget = 200, std::uint64_t seed = 12345) {
    if (p.dim() % 2 == 0) throw dimension_error("genericity analysis needs odd dimension");
    Rng rng(seed);
    int m = p.dim();
    for (int trial = 0; trial < budget; ++trial) {
        long N = 1 + trial / 25;  // grow the coordinate range as we go
        QVec pt(m);
        for (auto& q : pt) q = rng.rational(N, std::min<long>(N, 3));
        if (generic_at(p, pt).generic) return pt;
    }
    return std::nullopt;
}

// exact kernel basis of (L0 + t L1)(point), RREF-parametrized
inline std::vector<QVec> casimirs_at(const Pencil& p, const QVec& point, const std::optional<Rational>& t) {
    Exterior W = p.member_at(point, t);
    QMatrix M = skew_matrix_at(W, QVec(p.dim(), Rational(0)));
    return qkernel(M);
}

// constant 1-forms tau with L(tau, .) = 0 identically
inline std::vector<QVec> constant_casimirs(const Exterior& biv) {
    if (biv.kind() != ExtKind::MultiVector || biv.degree() != 2) throw kind_error("expected a bivector");
    int m = biv.dim();
    // one linear condition per (free index j, monomial)
    std::map<std::pair<int, Exps>, QVec> rows;
    for (const auto& [idx, c] : biv.components()) {
        int i = idx[0], j = idx[1];
        for (const auto& [e, q] : c.terms()) {
            auto& row_j = rows[{j, e}];
            if (row_j.empty()) row_j.assign(m, Rational(0));
            row_j[i] += q;  // tau_i contributes to component j
            auto& row_i = rows[{i, e}];
            if (row_i.empty()) row_i.assign(m, Rational(0));
            row_i[j] -= q;  // tau_j contributes to component i with a sign
        }
    }
    if (rows.empty()) {
        std::vector<QVec> all;
        for (int i = 0; i < m; ++i) {
            QVec v(m, Rational(0));
            v[i] = 1;
            all.push_back(std::move(v));
        }
        return all;
    }
    QMatrix M(static_cast<int>(rows.size()), m, Rational(0));
    int r = 0;
    for (const auto& [key, row] : rows) {
        (void)key;
        for (int i = 0; i < m; ++i) M.at(r, i) = row[i];
        ++r;
    }
    return qkernel(M);
}

}  // namespace biham
