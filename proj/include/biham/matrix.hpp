#pragma once

#include "biham/poly.hpp"
#include "biham/ratfunc.hpp"
#include "biham/unipoly.hpp"

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace biham {

// ---------------------------------------------------------------------------
// field adapters for the generic elimination engine
// ---------------------------------------------------------------------------

struct RationalField {
    using Elem = Rational;
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& a) const { return biham::is_zero(a); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (biham::is_zero(a)) throw value_error("division by zero");
        return Rational(1) / a;
    }
};

// Univariate rational functions in one parameter, fully reduced (monic
// denominator, gcd(num, den) = 1). Internal scalar for pencil-parameter
// linear algebra.
class Frac1 {
public:
    Frac1() = default;
    explicit Frac1(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(Rational(1))) {}
    Frac1(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw value_error("zero denominator");
        reduce();
    }
    static Frac1 constant(const Rational& c) { return Frac1(UniPoly::constant(c)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Frac1 operator+(const Frac1& o) const { return Frac1(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Frac1 operator-(const Frac1& o) const { return Frac1(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Frac1 operator*(const Frac1& o) const { return Frac1(num_ * o.num_, den_ * o.den_); }
    Frac1 operator/(const Frac1& o) const {
        if (o.is_zero()) throw value_error("division by zero");
        return Frac1(num_ * o.den_, den_ * o.num_);
    }
    Frac1 operator-() const { return Frac1(-num_, den_); }
    bool operator==(const Frac1& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = UniPoly::constant(Rational(1));
            return;
        }
        UniPoly g = unipoly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = unipoly_divexact(num_, g);
            den_ = unipoly_divexact(den_, g);
        }
        Rational lc = den_.leading();
        if (lc != 1) {
            Rational s = Rational(1) / lc;
            num_ = num_ * s;
            den_ = den_ * s;
        }
    }

    UniPoly num_, den_;
};

struct Frac1Field {
    using Elem = Frac1;
    Elem zero() const { return Frac1(UniPoly::zero()); }
    Elem one() const { return Frac1::constant(Rational(1)); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return one() / a; }
};

// Arithmetic modulo a squarefree univariate modulus. Inverting a zero
// divisor raises SplitRequest carrying the discovered proper factor; callers
// split the modulus and rerun on each branch (dynamic evaluation).
struct SplitRequest {
    UniPoly factor;
};

class QuotField {
public:
    using Elem = UniPoly;
    explicit QuotField(UniPoly modulus) : f_(modulus.monic()) {
        if (f_.degree() < 1) throw value_error("quotient modulus must be non-constant");
    }

    const UniPoly& modulus() const { return f_; }
    Elem reduce(const UniPoly& a) const { return a.divmod(f_).second; }

    Elem zero() const { return UniPoly::zero(); }
    Elem one() const { return UniPoly::constant(Rational(1)); }
    bool is_zero(const Elem& a) const { return reduce(a).is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem neg(const Elem& a) const { return reduce(-a); }
    Elem inv(const Elem& a0) const {
        Elem a = reduce(a0);
        if (a.is_zero()) throw value_error("inverting zero in quotient ring");
        auto [g, s, u] = unipoly_xgcd(a, f_);
        (void)u;
        if (g.degree() == 0) return reduce(s);
        throw SplitRequest{g};  // proper factor of the modulus
    }

private:
    UniPoly f_;
};

// ---------------------------------------------------------------------------
// generic dense elimination over a field
// ---------------------------------------------------------------------------

template <class F>
struct Mat {
    using E = typename F::Elem;
    int rows = 0, cols = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(int r, int c, const E& fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}
    E& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const E& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

using QMatrix = Mat<RationalField>;

// Reduced row echelon form in place; returns pivot column indices.
template <class F>
std::vector<int> rref(const F& fld, Mat<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int i = row; i < m.rows; ++i) {
            if (!fld.is_zero(m.at(i, col))) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        typename F::Elem s = fld.inv(m.at(row, col));
        for (int j = col; j < m.cols; ++j) m.at(row, j) = fld.mul(m.at(row, j), s);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || fld.is_zero(m.at(i, col))) continue;
            typename F::Elem factor = m.at(i, col);
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = fld.sub(m.at(i, j), fld.mul(factor, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
int rank(const F& fld, Mat<F> m) {
    return static_cast<int>(rref(fld, m).size());
}

// Null-space basis in the standard RREF parametrization: one vector per free
// column, with entry 1 at the free column. Deterministic.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& fld, Mat<F> m) {
    std::vector<int> pivots = rref(fld, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<typename F::Elem>> basis;
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<typename F::Elem> v(m.cols, fld.zero());
        v[fc] = fld.one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = fld.neg(m.at(static_cast<int>(r), fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

struct NoSolution {};

// One solution of Ax = b with free variables set to zero; nullopt when
// inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const F& fld, const Mat<F>& A,
                                                   const std::vector<typename F::Elem>& b) {
    if (static_cast<int>(b.size()) != A.rows) throw dimension_error("rhs size mismatch");
    Mat<F> aug(A.rows, A.cols + 1, fld.zero());
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    std::vector<int> pivots = rref(fld, aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    std::vector<typename F::Elem> x(A.cols, fld.zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), A.cols);
    return x;
}

inline QMatrix qmatrix(const std::vector<QVec>& rows) {
    if (rows.empty()) return QMatrix();
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), Rational(0));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw dimension_error("ragged matrix");
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

inline std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows != m.cols) throw dimension_error("inverse of non-square matrix");
    RationalField fld;
    Mat<RationalField> aug(m.rows, 2 * m.cols, Rational(0));
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = Rational(1);
    }
    auto pivots = rref(fld, aug);
    if (static_cast<int>(pivots.size()) < m.rows || pivots[m.rows - 1] != m.rows - 1) return std::nullopt;
    QMatrix inv(m.rows, m.cols, Rational(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

// ---------------------------------------------------------------------------
// fraction-free (Bareiss) elimination over polynomial entries
// ---------------------------------------------------------------------------

struct FFSolveResult {
    bool consistent = false;
    int rank = 0;
    std::vector<RatFunc> solution;  // one exact solution, free unknowns zero
    int certificate_row = -1;       // original row index witnessing inconsistency
    std::vector<Poly> pivots;       // Bareiss pivots, in elimination order
};

namespace detail {

inline bool pivot_better(const Poly& cand, const Poly& best) {
    if (best.is_zero()) return true;
    auto key = [](const Poly& p) { return std::make_pair(p.term_count(), p.degree()); };
    return key(cand) < key(best);
}

}  // namespace detail

// Solves A x = b exactly over the fraction field of the polynomial ring.
// Bareiss updates keep every intermediate entry a determinant of the input,
// so the interleaved divisions are exact; full pivoting (smallest entry by
// term count) keeps the swell down.
inline FFSolveResult fraction_free_solve(std::vector<std::vector<Poly>> A, std::vector<Poly> b) {
    FFSolveResult out;
    int R = static_cast<int>(A.size());
    int C = R > 0 ? static_cast<int>(A[0].size()) : 0;
    if (static_cast<int>(b.size()) != R) throw dimension_error("rhs size mismatch");
    int nv = 0;
    for (const auto& row : A) {
        if (static_cast<int>(row.size()) != C) throw dimension_error("ragged matrix");
        for (const auto& p : row) nv = std::max(nv, p.num_vars());
    }
    for (const auto& p : b) nv = std::max(nv, p.num_vars());
    std::vector<std::vector<Poly>> M(R, std::vector<Poly>(C + 1, Poly::zero(nv)));
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) M[i][j] = A[i][j].num_vars() == nv ? A[i][j] : A[i][j].widened(nv);
        M[i][C] = b[i].num_vars() == nv ? b[i] : b[i].widened(nv);
    }

    std::vector<int> colperm(C), roworig(R);
    for (int j = 0; j < C; ++j) colperm[j] = j;
    for (int i = 0; i < R; ++i) roworig[i] = i;

    Poly prev = Poly::constant(nv, Rational(1));
    int r = 0;
    int maxsteps = std::min(R, C);
    for (; r < maxsteps; ++r) {
        int pi = -1, pj = -1;
        Poly best = Poly::zero(nv);
        for (int i = r; i < R; ++i) {
            for (int j = r; j < C; ++j) {
                if (M[i][j].is_zero()) continue;
                if (pi < 0 || detail::pivot_better(M[i][j], best)) {
                    pi = i;
                    pj = j;
                    best = M[i][j];
                }
            }
        }
        if (pi < 0) break;
        if (pi != r) {
            std::swap(M[pi], M[r]);
            std::swap(roworig[pi], roworig[r]);
        }
        if (pj != r) {
            for (int i = 0; i < R; ++i) std::swap(M[i][pj], M[i][r]);
            std::swap(colperm[pj], colperm[r]);
        }
        const Poly piv = M[r][r];
        for (int i = r + 1; i < R; ++i) {
            for (int j = r + 1; j <= C; ++j) {
                Poly t = M[i][j] * piv - M[i][r] * M[r][j];
                auto q = poly_divexact(t, prev);
                if (!q) throw value_error("inexact Bareiss division");
                M[i][j] = std::move(*q);
            }
            M[i][r] = Poly::zero(nv);
        }
        prev = piv;
        out.pivots.push_back(piv);
    }
    out.rank = r;

    for (int i = r; i < R; ++i) {
        if (!M[i][C].is_zero()) {
            out.consistent = false;
            out.certificate_row = roworig[i];
            return out;
        }
    }
    out.consistent = true;

    std::vector<RatFunc> xp(C, RatFunc::zero(nv));
    for (int k = r - 1; k >= 0; --k) {
        RatFunc acc(M[k][C]);
        for (int j = k + 1; j < r; ++j) acc = acc - RatFunc(M[k][j]) * xp[j];
        xp[k] = acc / RatFunc(M[k][k]);
    }
    out.solution.assign(C, RatFunc::zero(nv));
    for (int j = 0; j < C; ++j) out.solution[colperm[j]] = xp[j];
    return out;
}

// Exact determinant by fraction-free elimination.
inline Poly bareiss_det(std::vector<std::vector<Poly>> M) {
    int n = static_cast<int>(M.size());
    if (n == 0) throw dimension_error("determinant of empty matrix");
    int nv = M[0][0].num_vars();
    for (auto& row : M)
        if (static_cast<int>(row.size()) != n) throw dimension_error("determinant of non-square matrix");
    Poly prev = Poly::constant(nv, Rational(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pi = -1;
        Poly best = Poly::zero(nv);
        for (int i = k; i < n; ++i) {
            if (M[i][k].is_zero()) continue;
            if (pi < 0 || detail::pivot_better(M[i][k], best)) {
                pi = i;
                best = M[i][k];
            }
        }
        if (pi < 0) return Poly::zero(nv);
        if (pi != k) {
            std::swap(M[pi], M[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto q = poly_divexact(t, prev);
                if (!q) throw value_error("inexact Bareiss division");
                M[i][j] = std::move(*q);
            }
            M[i][k] = Poly::zero(nv);
        }
        prev = M[k][k];
    }
    Poly d = M[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

// rank of a rational matrix
inline int qrank(const QMatrix& m) {
    RationalField fld;
    return rank(fld, m);
}

inline std::vector<QVec> qkernel(const QMatrix& m) {
    RationalField fld;
    return kernel_basis(fld, m);
}

inline std::optional<QVec> qsolve(const QMatrix& m, const QVec& b) {
    RationalField fld;
    return solve(fld, m, b);
}

}  // namespace biham
