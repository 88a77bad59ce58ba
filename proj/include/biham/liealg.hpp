#pragma once

#include "biham/exterior.hpp"
#include "biham/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace biham {

// Lie algebra given by exact rational structure constants, stored for i < j.
class LieAlgebra {
public:
    LieAlgebra() : dim_(0) {}
    explicit LieAlgebra(int dim, std::vector<std::string> labels = {}) : dim_(dim), labels_(std::move(labels)) {
        if (labels_.empty())
            for (int i = 1; i <= dim; ++i) labels_.push_back("e" + std::to_string(i));
        if (static_cast<int>(labels_.size()) != dim) throw dimension_error("label count mismatch");
    }

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) {
        if (static_cast<int>(labels.size()) != dim_) throw dimension_error("label count mismatch");
        labels_ = std::move(labels);
    }

    // [e_i, e_j] = sum_k coeffs[k] e_k, 0-based, i < j
    void set_bracket(int i, int j, QVec coeffs) {
        if (i < 0 || j >= dim_ || i >= j) throw dimension_error("bracket indices must satisfy 0 <= i < j < dim");
        if (static_cast<int>(coeffs.size()) != dim_) throw dimension_error("bracket coefficient length mismatch");
        if (biham::is_zero(coeffs))
            c_.erase({i, j});
        else
            c_[{i, j}] = std::move(coeffs);
    }

    QVec bracket_basis(int i, int j) const {
        if (i == j) return QVec(dim_, Rational(0));
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = c_.find({i, j});
        QVec r = it == c_.end() ? QVec(dim_, Rational(0)) : it->second;
        if (flip)
            for (auto& q : r) q = -q;
        return r;
    }

    QVec bracket(const QVec& u, const QVec& w) const {
        if (static_cast<int>(u.size()) != dim_ || static_cast<int>(w.size()) != dim_)
            throw dimension_error("element size mismatch");
        QVec r(dim_, Rational(0));
        for (const auto& [ij, cs] : c_) {
            Rational coef = u[ij.first] * w[ij.second] - u[ij.second] * w[ij.first];
            if (biham::is_zero(coef)) continue;
            for (int k = 0; k < dim_; ++k) r[k] += coef * cs[k];
        }
        return r;
    }

    const std::map<std::pair<int, int>, QVec>& structure_constants() const { return c_; }

    bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

private:
    int dim_;
    std::vector<std::string> labels_;
    std::map<std::pair<int, int>, QVec> c_;
};

// ---------------------------------------------------------------------------
// structural checks
// ---------------------------------------------------------------------------

struct JacobiViolation {
    int i, j, k;
    QVec defect;
};

struct JacobiReport {
    bool ok = true;
    std::vector<JacobiViolation> violations;
};

inline JacobiReport jacobi_check(const LieAlgebra& L) {
    JacobiReport rep;
    int m = L.dim();
    auto basis = [&](int i) {
        QVec v(m, Rational(0));
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                QVec d = L.bracket(L.bracket_basis(i, j), basis(k)) + L.bracket(L.bracket_basis(j, k), basis(i)) +
                         L.bracket(L.bracket_basis(k, i), basis(j));
                if (!biham::is_zero(d)) {
                    rep.ok = false;
                    rep.violations.push_back({i, j, k, std::move(d)});
                }
            }
        }
    }
    return rep;
}

// adjoint trace functional, one entry per basis vector
inline QVec trace_row(const LieAlgebra& L) {
    int m = L.dim();
    QVec tr(m, Rational(0));
    for (int j = 0; j < m; ++j) {
        Rational s(0);
        for (int i = 0; i < m; ++i) s += L.bracket_basis(j, i)[i];
        tr[j] = s;
    }
    return tr;
}

inline bool is_unimodular(const LieAlgebra& L) { return biham::is_zero(trace_row(L)); }

inline std::vector<QVec> unimodular_ideal(const LieAlgebra& L) {
    int m = L.dim();
    QVec tr = trace_row(L);
    if (biham::is_zero(tr)) {
        std::vector<QVec> all;
        for (int i = 0; i < m; ++i) {
            QVec v(m, Rational(0));
            v[i] = 1;
            all.push_back(std::move(v));
        }
        return all;
    }
    QMatrix row(1, m, Rational(0));
    for (int i = 0; i < m; ++i) row.at(0, i) = tr[i];
    auto basis = qkernel(row);
    // the derived ideal lies inside: tr vanishes on every bracket
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            Rational s(0);
            QVec b = L.bracket_basis(i, j);
            for (int k = 0; k < m; ++k) s += tr[k] * b[k];
            if (!biham::is_zero(s)) throw value_error("internal: derived ideal escapes the unimodular ideal");
        }
    }
    return basis;
}

inline std::vector<QVec> center(const LieAlgebra& L) {
    int m = L.dim();
    QMatrix M(m * m, m, Rational(0));
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            QVec b = L.bracket_basis(i, j);  // [e_i, e_j]
            for (int k = 0; k < m; ++k) M.at(j * m + k, i) = b[k];
        }
    }
    return qkernel(M);
}

inline LieAlgebra change_of_basis(const LieAlgebra& L, const QMatrix& T) {
    int m = L.dim();
    if (T.rows != m || T.cols != m) throw dimension_error("change of basis must be square of matching size");
    auto Ti = inverse(T);
    if (!Ti) throw value_error("singular change of basis");
    LieAlgebra out(m, L.labels());
    auto col = [&](const QMatrix& M, int j) {
        QVec v(m);
        for (int i = 0; i < m; ++i) v[i] = M.at(i, j);
        return v;
    };
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            QVec br = L.bracket(col(T, i), col(T, j));
            QVec nc(m, Rational(0));
            for (int k = 0; k < m; ++k) {
                Rational s(0);
                for (int l = 0; l < m; ++l) s += Ti->at(k, l) * br[l];
                nc[k] = s;
            }
            out.set_bracket(i, j, std::move(nc));
        }
    }
    return out;
}

// s * [.,.]_a + s1 * [.,.]_b on the same underlying space
inline LieAlgebra combine_brackets(const LieAlgebra& a, const Rational& s, const LieAlgebra& b, const Rational& s1) {
    if (a.dim() != b.dim()) throw dimension_error("bracket combination needs equal dimensions");
    int m = a.dim();
    LieAlgebra out(m, a.labels());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            QVec v = s * a.bracket_basis(i, j) + s1 * b.bracket_basis(i, j);
            out.set_bracket(i, j, std::move(v));
        }
    }
    return out;
}

inline LieAlgebra sum_algebra(const LieAlgebra& a, const LieAlgebra& b) {
    return combine_brackets(a, Rational(1), b, Rational(1));
}

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg differential and left-invariant geometry
// ---------------------------------------------------------------------------

namespace detail {

inline void require_coordinate_constant(const Exterior& form, int dim) {
    for (const auto& [idx, c] : form.components()) {
        (void)idx;
        for (const auto& [e, q] : c.terms()) {
            (void)q;
            for (int k = 0; k < dim; ++k)
                if (e[k] != 0) throw value_error("differential of a non-left-invariant form");
        }
    }
}

}  // namespace detail

// d e_k* = - sum_{i<j} c_ij^k e_i* ^ e_j*, extended as an odd derivation.
// Coefficients may carry symbolic parameters but not coordinates.
inline Exterior ce_d(const LieAlgebra& L, const Exterior& form) {
    if (form.kind() != ExtKind::Form) throw kind_error("Chevalley-Eilenberg differential acts on forms");
    if (form.dim() != L.dim()) throw dimension_error("form dimension mismatch");
    detail::require_coordinate_constant(form, L.dim());
    int m = L.dim(), nv = form.num_vars();
    std::vector<Exterior> de(m, Exterior::form(m, 2, nv));
    for (const auto& [ij, cs] : L.structure_constants()) {
        for (int k = 0; k < m; ++k) {
            if (biham::is_zero(cs[k])) continue;
            de[k].add_term({ij.first, ij.second}, Poly::constant(nv, -cs[k]));
        }
    }
    Exterior out(m, form.degree() + 1, ExtKind::Form, nv);
    if (form.degree() + 1 > m) return Exterior::form(m, m, nv);
    for (const auto& [idx, c] : form.components()) {
        for (size_t s = 0; s < idx.size(); ++s) {
            if (de[idx[s]].is_zero()) continue;
            Exterior rest(m, form.degree() - 1, ExtKind::Form, nv);
            IdxTuple ridx;
            for (size_t t = 0; t < idx.size(); ++t)
                if (t != s) ridx.push_back(idx[t]);
            rest.add_term(std::move(ridx), s % 2 == 0 ? c : -c);
            out = out + wedge(de[idx[s]], rest);
        }
    }
    return out;
}

inline Exterior one_form(const QVec& coords, int nvars = -1) {
    int m = static_cast<int>(coords.size());
    Exterior a = Exterior::form(m, 1, nvars);
    for (int i = 0; i < m; ++i)
        if (!biham::is_zero(coords[i])) a.add_term({i}, Poly::constant(a.num_vars(), coords[i]));
    return a;
}

inline bool is_cocycle(const LieAlgebra& L, const Exterior& beta) { return ce_d(L, beta).is_zero(); }

inline bool contact_check(const QVec& rho, const LieAlgebra& L) {
    int m = L.dim();
    if (m % 2 == 0) throw dimension_error("contact forms live on odd-dimensional algebras");
    int k = (m - 1) / 2;
    Exterior r = one_form(rho);
    Exterior dr = ce_d(L, r);
    return !wedge(r, wedge_pow(dr, k)).is_zero();
}

// Lie-Poisson bivector: sum over i < j of (sum_k c_ij^k x_k) d/dx_i ^ d/dx_j
inline Exterior lie_poisson(const LieAlgebra& L) {
    int m = L.dim();
    Exterior P = Exterior::multivector(m, 2, m);
    for (const auto& [ij, cs] : L.structure_constants()) {
        Poly coeff(m);
        for (int k = 0; k < m; ++k)
            if (!biham::is_zero(cs[k])) coeff += Poly::var(m, k) * cs[k];
        P.add_term({ij.first, ij.second}, coeff);
    }
    return P;
}

// modular vector field, constant coefficients
inline Exterior modular_vector(const LieAlgebra& L) {
    int m = L.dim();
    QVec tr = trace_row(L);
    Exterior X = Exterior::multivector(m, 1, m);
    for (int j = 0; j < m; ++j)
        if (!biham::is_zero(tr[j])) X.add_term({j}, Poly::constant(m, tr[j]));
    return X;
}

// ---------------------------------------------------------------------------
// the two-dimensional subalgebra attached to a 1-form with (d a)^{n-1} != 0
// ---------------------------------------------------------------------------

struct SubalgebraAAlpha {
    enum class Kind { Zero, TwoDimensional };
    Kind kind = Kind::Zero;
    QVec hamiltonian;   // v with i_v da = -a
    QVec kernel_basis;  // u spanning Ker da
    bool abelian = false;
};

// skew matrix D[i][j] = da(e_i, e_j) = -a([e_i, e_j])
inline QMatrix ce_two_form_matrix(const LieAlgebra& L, const QVec& alpha) {
    int m = L.dim();
    QMatrix D(m, m, Rational(0));
    for (const auto& [ij, cs] : L.structure_constants()) {
        Rational v(0);
        for (int k = 0; k < m; ++k) v += alpha[k] * cs[k];
        D.at(ij.first, ij.second) = -v;
        D.at(ij.second, ij.first) = v;
    }
    return D;
}

inline SubalgebraAAlpha subalgebra_A_alpha(const LieAlgebra& L, const QVec& alpha) {
    int m = L.dim();
    if (m % 2 == 0) throw dimension_error("odd dimension required");
    int n = (m + 1) / 2;
    Exterior a = one_form(alpha);
    Exterior da = ce_d(L, a);
    if (wedge_pow(da, n - 1).is_zero()) throw precondition_error("(d alpha)^{n-1} vanishes");
    SubalgebraAAlpha out;
    if (!wedge(a, wedge_pow(da, n - 1)).is_zero()) {
        out.kind = SubalgebraAAlpha::Kind::Zero;
        return out;
    }
    out.kind = SubalgebraAAlpha::Kind::TwoDimensional;
    QMatrix D = ce_two_form_matrix(L, alpha);
    auto ker = qkernel(D);
    if (ker.size() != 1) throw value_error("internal: kernel of d alpha is not a line");
    out.kernel_basis = ker[0];
    auto v = qsolve(D, alpha);  // i_v da = -a  <=>  D v = alpha
    if (!v) throw value_error("internal: no Hamiltonian though alpha kills the kernel");
    out.hamiltonian = *v;
    QVec bvu = L.bracket(out.hamiltonian, out.kernel_basis);
    out.abelian = biham::is_zero(bvu);
    // [v, Ker da] stays inside Ker da
    QMatrix two(2, m, Rational(0));
    for (int i = 0; i < m; ++i) {
        two.at(0, i) = out.kernel_basis[i];
        two.at(1, i) = bvu[i];
    }
    if (qrank(two) > 1) throw value_error("internal: kernel line is not preserved");
    return out;
}

// ---------------------------------------------------------------------------
// generic couples: the degeneracy polynomial and exact analysis of its roots
// ---------------------------------------------------------------------------

struct DegenerateParameter {
    bool is_rational = true;
    bool at_infinity = false;
    Rational value;   // when rational and finite
    UniPoly modulus;  // squarefree branch modulus when algebraic
    bool abelian = false;
};

struct GenericCoupleReport {
    bool generic = false;
    bool forms_generic = false;            // the 2-form couple condition
    bool contact_locus_degenerate = false; // contact fails for every parameter value
    std::vector<DegenerateParameter> degenerate_parameters;
    std::string reason;
};

namespace detail {

// bracket with coefficients in an arbitrary field, structure constants lifted
template <class F>
std::vector<typename F::Elem> bracket_f(const F& fld, const LieAlgebra& L,
                                        const std::vector<typename F::Elem>& u,
                                        const std::vector<typename F::Elem>& w,
                                        typename F::Elem (*lift)(const Rational&)) {
    int m = L.dim();
    std::vector<typename F::Elem> r(m, fld.zero());
    for (const auto& [ij, cs] : L.structure_constants()) {
        typename F::Elem coef = fld.sub(fld.mul(u[ij.first], w[ij.second]), fld.mul(u[ij.second], w[ij.first]));
        if (fld.is_zero(coef)) continue;
        for (int k = 0; k < m; ++k) {
            if (biham::is_zero(cs[k])) continue;
            r[k] = fld.add(r[k], fld.mul(coef, lift(cs[k])));
        }
    }
    return r;
}

inline UniPoly lift_const(const Rational& q) { return UniPoly::constant(q); }
inline Frac1 lift_frac(const Rational& q) { return Frac1::constant(q); }

// analyze abelian-ness of the subalgebra at every root of a squarefree
// modulus with no rational roots; splits on zero divisors
inline void analyze_branch(const LieAlgebra& L, const QVec& alpha, const QVec& beta, UniPoly modulus,
                           std::vector<DegenerateParameter>& out) {
    std::vector<UniPoly> work{modulus.monic()};
    int m = L.dim();
    while (!work.empty()) {
        UniPoly g = work.back();
        work.pop_back();
        if (g.degree() < 1) continue;
        QuotField F(g);
        try {
            // skew matrix of d(alpha + t beta)
            Mat<QuotField> D(m, m, F.zero());
            for (const auto& [ij, cs] : L.structure_constants()) {
                Rational va(0), vb(0);
                for (int k = 0; k < m; ++k) {
                    va += alpha[k] * cs[k];
                    vb += beta[k] * cs[k];
                }
                UniPoly entry = F.reduce(UniPoly(QVec{-va}) + UniPoly(QVec{Rational(0), Rational(1)}) * (-vb));
                D.at(ij.first, ij.second) = entry;
                D.at(ij.second, ij.first) = F.neg(entry);
            }
            auto ker = kernel_basis(F, D);
            if (ker.size() != 1) throw value_error("internal: kernel is not a line over the quotient ring");
            std::vector<UniPoly> tau(m);
            for (int k = 0; k < m; ++k)
                tau[k] = F.reduce(UniPoly(QVec{alpha[k]}) + UniPoly(QVec{Rational(0), beta[k]}));
            auto v = solve(F, D, tau);  // D v = tau  <=>  i_v d tau = -tau
            if (!v) throw value_error("internal: contact did not fail at a root of the degeneracy polynomial");
            auto w = bracket_f(F, L, *v, ker[0], &lift_const);
            // roots where all commutator components vanish are the abelian ones
            UniPoly h = g;
            for (const auto& wk : w) {
                UniPoly r = F.reduce(wk);
                if (!r.is_zero()) h = unipoly_gcd(h, r);
                if (h.degree() == 0) break;
            }
            if (h.degree() == 0) {
                out.push_back({false, false, Rational(0), g, false});
            } else if (h.degree() == g.degree()) {
                out.push_back({false, false, Rational(0), g, true});
            } else {
                out.push_back({false, false, Rational(0), h, true});
                out.push_back({false, false, Rational(0), unipoly_divexact(g, h).monic(), false});
            }
        } catch (const SplitRequest& s) {
            work.push_back(s.factor);
            work.push_back(unipoly_divexact(g, s.factor).monic());
        }
    }
}

}  // namespace detail

// volume-form coefficient of (alpha + t beta) ^ (d(alpha + t beta))^{n-1},
// as a univariate polynomial in t
inline UniPoly degeneracy_polynomial(const LieAlgebra& L, const QVec& alpha, const QVec& beta) {
    int m = L.dim();
    if (m % 2 == 0) throw dimension_error("odd dimension required");
    int n = (m + 1) / 2;
    int nv = m + 1;
    Poly t = Poly::var(nv, m);
    Exterior tau(m, 1, ExtKind::Form, nv);
    for (int i = 0; i < m; ++i) tau.add_term({i}, Poly::constant(nv, alpha[i]) + t * beta[i]);
    Exterior dtau = ce_d(L, tau);
    Exterior top = wedge(tau, wedge_pow(dtau, n - 1));
    IdxTuple all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    Poly c = top.coeff(all);
    QVec coeffs;
    for (const auto& [e, q] : c.terms()) {
        std::uint32_t deg = e[m];
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] = q;
    }
    return UniPoly(std::move(coeffs));
}

inline GenericCoupleReport generic_couple_check(const LieAlgebra& L, const QVec& alpha, const QVec& beta) {
    int m = L.dim();
    if (m % 2 == 0) throw dimension_error("odd dimension required");
    int n = (m + 1) / 2;
    GenericCoupleReport rep;

    Exterior da = ce_d(L, one_form(alpha));
    Exterior db = ce_d(L, one_form(beta));
    PencilPowerCertificate cert = pencil_power_certificate(da, db);
    rep.forms_generic = cert.generic;
    if (!cert.generic) {
        rep.generic = false;
        rep.reason = "the differentials do not form a generic couple of 2-forms";
        return rep;
    }

    auto record_rational = [&](const Rational& r, bool at_inf) {
        QVec tau = at_inf ? beta : alpha + r * beta;
        SubalgebraAAlpha A = subalgebra_A_alpha(L, tau);
        DegenerateParameter d;
        d.is_rational = true;
        d.at_infinity = at_inf;
        d.value = r;
        d.abelian = A.kind == SubalgebraAAlpha::Kind::TwoDimensional && A.abelian;
        rep.degenerate_parameters.push_back(std::move(d));
    };

    // the t = infinity direction: beta itself
    Exterior bform = one_form(beta);
    if (wedge(bform, wedge_pow(db, n - 1)).is_zero()) record_rational(Rational(0), true);

    UniPoly p = degeneracy_polynomial(L, alpha, beta);
    if (!p.is_zero()) {
        auto rr = rational_roots(p);
        for (const auto& r : rr.roots) record_rational(r, false);
        if (rr.rootfree.degree() > 0)
            detail::analyze_branch(L, alpha, beta, rr.rootfree, rep.degenerate_parameters);
    } else {
        // contact fails for every t: no finite list of parameters can
        // certify the couple, so the verdict is a refusal; the generic-fiber
        // analysis over the fraction field still documents the subalgebras
        rep.contact_locus_degenerate = true;
        Frac1Field F;
        Mat<Frac1Field> D(m, m, F.zero());
        UniPoly t = UniPoly::t();
        for (const auto& [ij, cs] : L.structure_constants()) {
            Rational va(0), vb(0);
            for (int k = 0; k < m; ++k) {
                va += alpha[k] * cs[k];
                vb += beta[k] * cs[k];
            }
            Frac1 entry(UniPoly(QVec{-va}) + t * (-vb));
            D.at(ij.first, ij.second) = entry;
            D.at(ij.second, ij.first) = -entry;
        }
        auto ker = kernel_basis(F, D);
        if (ker.size() != 1) throw value_error("internal: generic kernel is not a line");
        std::vector<Frac1> tau(m);
        for (int k = 0; k < m; ++k) tau[k] = Frac1(UniPoly(QVec{alpha[k]}) + t * beta[k]);
        auto v = solve(F, D, tau);
        if (!v) throw value_error("internal: generically unsolvable though contact fails identically");
        auto w = detail::bracket_f(F, L, *v, ker[0], &detail::lift_frac);
        // [v, u] = c u; read c off a nonzero kernel component
        int pivot = -1;
        for (int i = 0; i < m; ++i)
            if (!ker[0][i].is_zero()) pivot = i;
        Frac1 c = w[pivot] / ker[0][pivot];
        if (c.is_zero()) {
            rep.generic = false;
            rep.reason = "the two-dimensional subalgebra is abelian for generic parameter values";
            return rep;
        }
        UniPoly exceptional = c.num();
        exceptional = exceptional * c.den();
        for (const auto& vi : *v) exceptional = exceptional * vi.den();
        for (const auto& ki : ker[0]) exceptional = exceptional * ki.den();
        auto rr = rational_roots(squarefree_part(exceptional));
        for (const auto& r : rr.roots) record_rational(r, false);
        if (rr.rootfree.degree() > 0)
            detail::analyze_branch(L, alpha, beta, rr.rootfree, rep.degenerate_parameters);
    }

    rep.generic = true;
    for (const auto& d : rep.degenerate_parameters) {
        if (d.abelian) {
            rep.generic = false;
            rep.reason = "abelian two-dimensional subalgebra at a degenerate parameter value";
            break;
        }
    }
    if (rep.contact_locus_degenerate) {
        rep.generic = false;
        if (rep.reason.empty()) rep.reason = "the contact condition fails for every parameter value";
    }
    return rep;
}

}  // namespace biham
