#pragma once

#include "biham/matrix.hpp"
#include "biham/poly.hpp"
#include "biham/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace biham {

enum class ExtKind { Form, MultiVector };

using IdxTuple = std::vector<int>;  // strictly increasing, 0-based

namespace detail {

// sort an index sequence, returning the permutation sign; 0 on repeats
inline int sort_sign(IdxTuple& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        size_t j = i;
        while (j > 0 && idx[j - 1] > idx[j]) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
            --j;
        }
    }
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] == idx[i]) return 0;
    return sign;
}

}  // namespace detail

// Graded exterior object on coordinate space of dimension `dim` with Poly
// coefficients. The coefficient ring may carry extra symbolic parameters:
// num_vars >= dim, and only the first `dim` variables are coordinates.
class Exterior {
public:
    using Components = std::map<IdxTuple, Poly>;

    Exterior() : dim_(0), degree_(0), kind_(ExtKind::Form), nvars_(0) {}
    Exterior(int dim, int degree, ExtKind kind, int nvars = -1)
        : dim_(dim), degree_(degree), kind_(kind), nvars_(nvars < 0 ? dim : nvars) {
        if (degree_ < 0) throw dimension_error("negative degree");
        if (nvars_ < dim_) throw dimension_error("coefficient ring must contain all coordinates");
    }

    static Exterior form(int dim, int degree, int nvars = -1) { return Exterior(dim, degree, ExtKind::Form, nvars); }
    static Exterior multivector(int dim, int degree, int nvars = -1) {
        return Exterior(dim, degree, ExtKind::MultiVector, nvars);
    }
    // dx_i (0-based index)
    static Exterior dx(int dim, int i, int nvars = -1) {
        Exterior e = form(dim, 1, nvars);
        e.add_term({i}, Poly::constant(e.nvars_, Rational(1)));
        return e;
    }
    // d/dx_i
    static Exterior ddx(int dim, int i, int nvars = -1) {
        Exterior e = multivector(dim, 1, nvars);
        e.add_term({i}, Poly::constant(e.nvars_, Rational(1)));
        return e;
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    ExtKind kind() const { return kind_; }
    int num_vars() const { return nvars_; }
    bool is_zero() const { return comps_.empty(); }
    const Components& components() const { return comps_; }

    Poly coeff(IdxTuple idx) const {
        int sign = detail::sort_sign(idx);
        auto it = comps_.find(idx);
        if (it == comps_.end() || sign == 0) return Poly::zero(nvars_);
        return sign == 1 ? it->second : -it->second;
    }

    void add_term(IdxTuple idx, const Poly& c) {
        if (static_cast<int>(idx.size()) != degree_) throw dimension_error("index tuple length != degree");
        if (c.num_vars() != nvars_) throw dimension_error("coefficient variable count mismatch");
        for (int i : idx)
            if (i < 0 || i >= dim_) throw dimension_error("index out of range");
        if (c.is_zero()) return;
        int sign = detail::sort_sign(idx);
        if (sign == 0) return;
        Poly v = sign == 1 ? c : -c;
        auto it = comps_.find(idx);
        if (it == comps_.end()) {
            comps_.emplace(std::move(idx), std::move(v));
        } else {
            it->second += v;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    bool operator==(const Exterior& o) const {
        return dim_ == o.dim_ && degree_ == o.degree_ && kind_ == o.kind_ && nvars_ == o.nvars_ && comps_ == o.comps_;
    }
    bool operator!=(const Exterior& o) const { return !(*this == o); }

    Exterior operator+(const Exterior& o) const {
        check_same(o);
        Exterior r = *this;
        for (const auto& [idx, c] : o.comps_) r.add_term(idx, c);
        return r;
    }
    Exterior operator-(const Exterior& o) const {
        check_same(o);
        Exterior r = *this;
        for (const auto& [idx, c] : o.comps_) r.add_term(idx, -c);
        return r;
    }
    Exterior operator-() const {
        Exterior r(dim_, degree_, kind_, nvars_);
        for (const auto& [idx, c] : comps_) r.comps_.emplace(idx, -c);
        return r;
    }
    Exterior operator*(const Rational& a) const {
        if (biham::is_zero(a)) return Exterior(dim_, degree_, kind_, nvars_);
        Exterior r(dim_, degree_, kind_, nvars_);
        for (const auto& [idx, c] : comps_) r.comps_.emplace(idx, c * a);
        return r;
    }
    Exterior operator*(const Poly& p) const {
        Exterior r(dim_, degree_, kind_, nvars_);
        for (const auto& [idx, c] : comps_) r.add_term(idx, c * p);
        return r;
    }

    // substitute rational values for all coefficient variables
    Exterior eval_at(const QVec& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw dimension_error("point size mismatch");
        Exterior r(dim_, degree_, kind_, nvars_);
        for (const auto& [idx, c] : comps_) r.add_term(idx, Poly::constant(nvars_, c.eval(point)));
        return r;
    }

    bool has_constant_coefficients() const {
        for (const auto& [idx, c] : comps_) {
            (void)idx;
            if (!c.is_constant()) return false;
        }
        return true;
    }

    Exterior widened(int new_nvars) const {
        Exterior r(dim_, degree_, kind_, new_nvars);
        for (const auto& [idx, c] : comps_) r.comps_.emplace(idx, c.widened(new_nvars));
        return r;
    }

private:
    void check_same(const Exterior& o) const {
        if (kind_ != o.kind_) throw kind_error("mixing forms and multivectors");
        if (dim_ != o.dim_ || degree_ != o.degree_ || nvars_ != o.nvars_)
            throw dimension_error("exterior objects do not match");
    }

    int dim_, degree_;
    ExtKind kind_;
    int nvars_;
    Components comps_;
};

inline Exterior operator*(const Rational& a, const Exterior& e) { return e * a; }
inline Exterior operator*(const Poly& p, const Exterior& e) { return e * p; }

// Koszul-sign graded product.
inline Exterior wedge(const Exterior& a, const Exterior& b) {
    if (a.kind() != b.kind()) throw kind_error("mixing forms and multivectors in wedge");
    if (a.dim() != b.dim() || a.num_vars() != b.num_vars()) throw dimension_error("wedge operands do not match");
    Exterior r(a.dim(), a.degree() + b.degree(), a.kind(), a.num_vars());
    for (const auto& [ia, ca] : a.components()) {
        for (const auto& [ib, cb] : b.components()) {
            IdxTuple merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            int sign = detail::sort_sign(merged);
            if (sign == 0) continue;
            Poly c = ca * cb;
            r.add_term(std::move(merged), sign == 1 ? c : -c);
        }
    }
    return r;
}

inline Exterior wedge_pow(const Exterior& a, int k) {
    if (k < 0) throw value_error("negative wedge power");
    if (k == 0) {
        Exterior unit(a.dim(), 0, a.kind(), a.num_vars());
        unit.add_term({}, Poly::constant(a.num_vars(), Rational(1)));
        return unit;
    }
    Exterior r = a;
    for (int i = 1; i < k; ++i) r = wedge(r, a);
    return r;
}

// Exterior derivative; differentiates in the coordinate variables only. A
// top-degree input maps to the canonical zero object.
inline Exterior exterior_derivative(const Exterior& a) {
    if (a.kind() != ExtKind::Form) throw kind_error("exterior derivative of a multivector");
    if (a.degree() >= a.dim()) return Exterior::form(a.dim(), a.dim(), a.num_vars());
    Exterior r(a.dim(), a.degree() + 1, ExtKind::Form, a.num_vars());
    for (const auto& [idx, c] : a.components()) {
        for (int j = 0; j < a.dim(); ++j) {
            Poly dc = c.partial_derivative(j);
            if (dc.is_zero()) continue;
            IdxTuple widx;
            widx.reserve(idx.size() + 1);
            widx.push_back(j);
            widx.insert(widx.end(), idx.begin(), idx.end());
            r.add_term(std::move(widx), dc);
        }
    }
    return r;
}

// i_v for a degree-1 multivector field v (Poly components).
inline Exterior interior_product(const Exterior& v, const Exterior& a) {
    if (v.kind() != ExtKind::MultiVector || v.degree() != 1) throw kind_error("contraction needs a vector field");
    if (a.kind() != ExtKind::Form) throw kind_error("contraction target must be a form");
    if (v.dim() != a.dim() || v.num_vars() != a.num_vars()) throw dimension_error("contraction operands do not match");
    if (a.degree() == 0) return Exterior::form(a.dim(), 0, a.num_vars());
    Exterior r(a.dim(), a.degree() - 1, ExtKind::Form, a.num_vars());
    for (const auto& [idx, c] : a.components()) {
        for (size_t pos = 0; pos < idx.size(); ++pos) {
            const Poly& vc = v.coeff({idx[pos]});
            if (vc.is_zero()) continue;
            IdxTuple rest;
            rest.reserve(idx.size() - 1);
            for (size_t t = 0; t < idx.size(); ++t)
                if (t != pos) rest.push_back(idx[t]);
            Poly term = vc * c;
            r.add_term(std::move(rest), pos % 2 == 0 ? term : -term);
        }
    }
    return r;
}

// Constant-coefficient volume form c * dx1^...^dxm, c != 0.
struct VolumeForm {
    int dim;
    Rational coeff;

    VolumeForm(int m, Rational c = Rational(1)) : dim(m), coeff(std::move(c)) {
        if (biham::is_zero(coeff)) throw value_error("volume form must be nonzero");
    }
    Exterior as_form(int nvars = -1) const {
        Exterior e = Exterior::form(dim, dim, nvars);
        IdxTuple all(dim);
        for (int i = 0; i < dim; ++i) all[i] = i;
        e.add_term(std::move(all), Poly::constant(e.num_vars(), coeff));
        return e;
    }
};

namespace detail {

// sign of the permutation sorting (i, j, complement-of-{i,j}) into 0..m-1
inline int split_sign(int i, int j, int m) {
    IdxTuple seq;
    seq.reserve(m);
    seq.push_back(i);
    seq.push_back(j);
    for (int k = 0; k < m; ++k)
        if (k != i && k != j) seq.push_back(k);
    IdxTuple copy = seq;
    return sort_sign(copy);
}

inline IdxTuple complement_pair(int i, int j, int m) {
    IdxTuple c;
    c.reserve(m - 2);
    for (int k = 0; k < m; ++k)
        if (k != i && k != j) c.push_back(k);
    return c;
}

}  // namespace detail

// The bivector L with L(alpha, beta) * Omega = alpha ^ beta ^ omega for all
// constant 1-forms.
inline Exterior bivector_from_form(const Exterior& omega, const VolumeForm& Omega) {
    if (omega.kind() != ExtKind::Form) throw kind_error("representative must be a form");
    if (omega.dim() != Omega.dim) throw dimension_error("volume form dimension mismatch");
    int m = omega.dim();
    if (omega.degree() != m - 2) throw dimension_error("representative must have degree dim - 2");
    Exterior r = Exterior::multivector(m, 2, omega.num_vars());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Poly& w = omega.coeff(detail::complement_pair(i, j, m));
            if (w.is_zero()) continue;
            int sign = detail::split_sign(i, j, m);
            Poly c = w * (Rational(sign) / Omega.coeff);
            r.add_term({i, j}, c);
        }
    }
    return r;
}

// Inverse correspondence: the signed-complement expansion of the bivector.
inline Exterior form_from_bivector(const Exterior& biv, const VolumeForm& Omega) {
    if (biv.kind() != ExtKind::MultiVector || biv.degree() != 2) throw kind_error("expected a bivector");
    if (biv.dim() != Omega.dim) throw dimension_error("volume form dimension mismatch");
    int m = biv.dim();
    Exterior r = Exterior::form(m, m - 2, biv.num_vars());
    for (const auto& [idx, c] : biv.components()) {
        int i = idx[0], j = idx[1];
        int sign = detail::split_sign(i, j, m);
        r.add_term(detail::complement_pair(i, j, m), c * (Rational(sign) * Omega.coeff));
    }
    return r;
}

// Contraction of a bivector with a 1-form in the first slot.
inline Exterior contract_bivector(const Exterior& biv, const Exterior& alpha) {
    if (biv.kind() != ExtKind::MultiVector || biv.degree() != 2) throw kind_error("expected a bivector");
    if (alpha.kind() != ExtKind::Form || alpha.degree() != 1) throw kind_error("expected a 1-form");
    if (biv.dim() != alpha.dim() || biv.num_vars() != alpha.num_vars())
        throw dimension_error("contraction operands do not match");
    Exterior r = Exterior::multivector(biv.dim(), 1, biv.num_vars());
    for (const auto& [idx, c] : biv.components()) {
        int i = idx[0], j = idx[1];
        const Poly& ai = alpha.coeff({i});
        const Poly& aj = alpha.coeff({j});
        if (!ai.is_zero()) r.add_term({j}, c * ai);
        if (!aj.is_zero()) r.add_term({i}, -(c * aj));
    }
    return r;
}

// The vector field v with i_v Omega = -alpha ^ omega.
inline Exterior hamiltonian_field(const Exterior& alpha, const Exterior& omega, const VolumeForm& Omega) {
    if (alpha.degree() != 1 || alpha.kind() != ExtKind::Form) throw kind_error("expected a 1-form");
    int m = omega.dim();
    if (omega.degree() != m - 2) throw dimension_error("representative must have degree dim - 2");
    Exterior aw = wedge(alpha, omega);  // degree m-1
    Exterior v = Exterior::multivector(m, 1, omega.num_vars());
    for (int k = 0; k < m; ++k) {
        IdxTuple rest;
        rest.reserve(m - 1);
        for (int t = 0; t < m; ++t)
            if (t != k) rest.push_back(t);
        const Poly& comp = aw.coeff(rest);
        if (comp.is_zero()) continue;
        // i_{d/dx_k} Omega = (-1)^k * Omega.coeff * dx_{complement}
        Rational s = Rational(k % 2 == 0 ? -1 : 1) / Omega.coeff;
        v.add_term({k}, comp * s);
    }
    return v;
}

// Builds the representative (k a_1^...^a_r^beta^{k-1}, a_1^...^a_r^beta^k)
// of the bivector described by kernel 1-forms and a 2-form, m = 2k + r.
inline std::pair<Exterior, Exterior> representative_from_kernel_data(const std::vector<Exterior>& alphas,
                                                                     const Exterior& beta) {
    if (beta.kind() != ExtKind::Form || beta.degree() != 2) throw kind_error("expected a 2-form");
    int m = beta.dim();
    int r = static_cast<int>(alphas.size());
    if ((m - r) % 2 != 0 || m - r < 0) throw dimension_error("need m - r even");
    int k = (m - r) / 2;
    Exterior prod(m, 0, ExtKind::Form, beta.num_vars());
    prod.add_term({}, Poly::constant(beta.num_vars(), Rational(1)));
    for (const auto& a : alphas) {
        if (a.degree() != 1 || a.dim() != m) throw dimension_error("kernel forms must be 1-forms");
        prod = wedge(prod, a);
    }
    Exterior vol = wedge(prod, wedge_pow(beta, k));
    if (vol.is_zero()) throw precondition_error("degenerate input: alphas ^ beta^k vanishes");
    Exterior omega = wedge(prod, wedge_pow(beta, k - 1)) * Rational(k);
    return {omega, vol};
}

// Exact rank of a 2-form (or bivector) evaluated at a rational point.
inline int two_form_rank(const Exterior& beta, const QVec& point) {
    if (beta.degree() != 2) throw dimension_error("rank needs a degree-2 object");
    QVec full = point;
    if (static_cast<int>(full.size()) == beta.dim() && beta.num_vars() > beta.dim())
        throw dimension_error("point must supply all coefficient variables");
    if (static_cast<int>(full.size()) != beta.num_vars()) throw dimension_error("point size mismatch");
    int m = beta.dim();
    QMatrix M(m, m, Rational(0));
    for (const auto& [idx, c] : beta.components()) {
        Rational v = c.eval(full);
        M.at(idx[0], idx[1]) = v;
        M.at(idx[1], idx[0]) = -v;
    }
    return qrank(M);
}

// skew matrix of a degree-2 object at a point
inline QMatrix skew_matrix_at(const Exterior& two, const QVec& point) {
    if (two.degree() != 2) throw dimension_error("expected a degree-2 object");
    int m = two.dim();
    QMatrix M(m, m, Rational(0));
    for (const auto& [idx, c] : two.components()) {
        Rational v = c.eval(point);
        M.at(idx[0], idx[1]) = v;
        M.at(idx[1], idx[0]) = -v;
    }
    return M;
}

inline std::string exterior_str(const Exterior& e, const std::vector<std::string>& names) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [idx, c] : e.components()) {
        std::string blade;
        for (int i : idx) {
            if (!blade.empty()) blade += "^";
            blade += (e.kind() == ExtKind::Form ? "dx" : "d/dx");
            blade += std::to_string(i + 1);
        }
        std::string cs = poly_str(c, names);
        bool needs_parens = cs.find(' ') != std::string::npos;
        std::string piece;
        if (blade.empty()) {
            piece = needs_parens ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            piece = blade;
        } else if (cs == "-1") {
            piece = "-" + blade;
        } else {
            piece = (needs_parens ? "(" + cs + ")" : cs) + "*" + blade;
        }
        if (out.empty()) {
            out = piece;
        } else if (piece.size() > 1 && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

inline std::string qvec_str(const QVec& v, const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        Rational c = v[i];
        if (out.empty()) {
            if (sgn(c) < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
            if (sgn(c) < 0) c = -c;
        }
        std::string nm = i < names.size() ? names[i] : "v" + std::to_string(i + 1);
        out += (c == 1) ? nm : rat_str(c) + "*" + nm;
    }
    return out.empty() ? "0" : out;
}

// For degree-2 objects A, B with constant rational coefficients on odd dim
// m = 2n-1: the components of (A + tB)^{n-1} as univariate polynomials in t,
// their gcd, and the t = infinity leading check (B^{n-1} != 0). The couple is
// generic exactly when the gcd is constant and the leading check holds: a
// common complex zero of the component polynomials is the same thing as a
// non-constant common factor over the rationals.
struct PencilPowerCertificate {
    std::vector<UniPoly> t_polynomials;
    UniPoly gcd;
    bool leading_ok = false;
    bool generic = false;
};

inline PencilPowerCertificate pencil_power_certificate(const Exterior& A, const Exterior& B) {
    if (A.degree() != 2 || B.degree() != 2) throw dimension_error("pencil members must have degree 2");
    if (A.dim() != B.dim() || A.kind() != B.kind()) throw dimension_error("pencil members do not match");
    int m = A.dim();
    if (m % 2 == 0) throw dimension_error("pencil genericity needs odd dimension");
    if (!A.has_constant_coefficients() || !B.has_constant_coefficients())
        throw value_error("pencil power certificate needs constant coefficients");
    int n = (m + 1) / 2;
    // embed with a single polynomial variable t
    Exterior W(m, 2, A.kind(), m + 1);
    Poly t = Poly::var(m + 1, m);
    for (const auto& [idx, c] : A.components()) W.add_term(idx, Poly::constant(m + 1, c.constant_value()));
    for (const auto& [idx, c] : B.components()) W.add_term(idx, t * c.constant_value());
    Exterior P = wedge_pow(W, n - 1);

    PencilPowerCertificate cert;
    bool first = true;
    int expected_lead = n - 1;
    for (const auto& [idx, c] : P.components()) {
        (void)idx;
        // c is a polynomial in t alone
        UniPoly up(QVec{});
        QVec coeffs;
        for (const auto& [e, q] : c.terms()) {
            std::uint32_t deg = e[m];
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
            coeffs[deg] = q;
        }
        up = UniPoly(std::move(coeffs));
        if (up.degree() == expected_lead) cert.leading_ok = true;
        cert.gcd = first ? up.monic() : unipoly_gcd(cert.gcd, up);
        first = false;
        cert.t_polynomials.push_back(std::move(up));
    }
    if (first) {
        cert.gcd = UniPoly::zero();  // the power vanishes identically
        cert.generic = false;
        return cert;
    }
    cert.generic = cert.leading_ok && cert.gcd.degree() == 0;
    return cert;
}

// ---------------------------------------------------------------------------
// forms with rational-function coefficients (for the 1-form solved by the
// flatness criterion and its exterior derivative)
// ---------------------------------------------------------------------------

struct RatOneForm {
    int dim = 0;
    std::vector<RatFunc> comp;  // size dim

    bool is_zero() const {
        for (const auto& c : comp)
            if (!c.is_zero()) return false;
        return true;
    }
};

struct RatTwoForm {
    int dim = 0;
    std::map<std::pair<int, int>, RatFunc> comp;  // keys i < j

    bool is_zero() const {
        for (const auto& [k, c] : comp) {
            (void)k;
            if (!c.is_zero()) return false;
        }
        return true;
    }
    bool operator==(const RatTwoForm& o) const {
        if (dim != o.dim) return false;
        for (int i = 0; i < dim; ++i) {
            for (int j = i + 1; j < dim; ++j) {
                auto a = comp.find({i, j});
                auto b = o.comp.find({i, j});
                RatFunc av = a == comp.end() ? RatFunc() : a->second;
                RatFunc bv = b == o.comp.end() ? RatFunc() : b->second;
                if (!(av == bv)) return false;
            }
        }
        return true;
    }
};

// d of a 1-form with rational-function coefficients: (d l)_{ij} = d_i l_j - d_j l_i
inline RatTwoForm rat_exterior_derivative(const RatOneForm& l) {
    RatTwoForm r;
    r.dim = l.dim;
    for (int i = 0; i < l.dim; ++i) {
        for (int j = i + 1; j < l.dim; ++j) {
            RatFunc v = l.comp[j].partial_derivative(i) - l.comp[i].partial_derivative(j);
            if (!v.is_zero()) r.comp[{i, j}] = v;
        }
    }
    return r;
}

}  // namespace biham
