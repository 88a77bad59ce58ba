#pragma once

#include "biham/liealg.hpp"
#include "biham/pencil.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace biham {

// ---------------------------------------------------------------------------
// truncated polynomial-field algebra
// ---------------------------------------------------------------------------

// [e_i, e_j] = (j - i) e_{i+j-1} while the target index stays in range
inline LieAlgebra truncated_algebra(int m) {
    if (m < 3) throw value_error("truncated algebra needs dimension >= 3");
    LieAlgebra L(m);
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            int target = a + b;  // 0-based image of e_{i+j-1}
            if (target > m - 1) continue;
            QVec v(m, Rational(0));
            v[target] = Rational(b - a);
            L.set_bracket(a, b, std::move(v));
        }
    }
    return L;
}

// ---------------------------------------------------------------------------
// secondary algebra: extension by the adjoint module plus a grading element
// ---------------------------------------------------------------------------

inline LieAlgebra secondary_algebra(const LieAlgebra& L) {
    int m = L.dim();
    int M = 2 * m + 1;
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back("e" + std::to_string(i));
    for (int i = 1; i <= m; ++i) labels.push_back("f" + std::to_string(i));
    labels.push_back("e");
    LieAlgebra B(M, std::move(labels));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            QVec c = L.bracket_basis(i, j);
            QVec ee(M, Rational(0)), ef(M, Rational(0)), fe(M, Rational(0));
            bool nz = false;
            for (int k = 0; k < m; ++k) {
                if (biham::is_zero(c[k])) continue;
                nz = true;
                ee[k] = c[k];       // [e_i, e_j]
                ef[m + k] = c[k];   // [e_i, f_j]
                fe[m + k] = -c[k];  // [e_j, f_i] = -[e_j, f_i]... sign via c_ji = -c_ij
            }
            if (!nz) continue;
            B.set_bracket(i, j, std::move(ee));
            B.set_bracket(i, m + j, std::move(ef));
            B.set_bracket(j, m + i, std::move(fe));
        }
    }
    for (int j = 0; j < m; ++j) {
        QVec v(M, Rational(0));
        v[m + j] = 1;  // [f_j, e] = f_j
        B.set_bracket(m + j, M - 1, std::move(v));
    }
    return B;
}

// ---------------------------------------------------------------------------
// Nijenhuis torsion and the deformed bracket
// ---------------------------------------------------------------------------

inline QVec apply_endo(const QMatrix& phi, const QVec& v) {
    int m = static_cast<int>(v.size());
    if (phi.rows != m || phi.cols != m) throw dimension_error("endomorphism size mismatch");
    QVec r(m, Rational(0));
    for (int i = 0; i < m; ++i) {
        Rational s(0);
        for (int j = 0; j < m; ++j) s += phi.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

struct NijenhuisEntry {
    int i, j;
    QVec value;
};

struct NijenhuisTable {
    int dim = 0;
    std::vector<NijenhuisEntry> entries;  // all pairs i < j

    bool is_zero() const {
        for (const auto& e : entries)
            if (!biham::is_zero(e.value)) return false;
        return true;
    }
    std::optional<NijenhuisEntry> first_nonzero() const {
        for (const auto& e : entries)
            if (!biham::is_zero(e.value)) return e;
        return std::nullopt;
    }
};

inline NijenhuisTable nijenhuis_torsion(const LieAlgebra& L, const QMatrix& phi) {
    int m = L.dim();
    NijenhuisTable N;
    N.dim = m;
    auto basis = [&](int i) {
        QVec v(m, Rational(0));
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            QVec pi = apply_endo(phi, basis(i)), pj = apply_endo(phi, basis(j));
            QVec val = L.bracket(pi, pj) + apply_endo(phi, apply_endo(phi, L.bracket_basis(i, j))) -
                       apply_endo(phi, L.bracket(basis(i), pj)) - apply_endo(phi, L.bracket(pi, basis(j)));
            N.entries.push_back({i, j, std::move(val)});
        }
    }
    return N;
}

// [a, b]_1 = [a, phi b] + [phi a, b] - phi [a, b]; requires vanishing torsion
inline LieAlgebra deformed_bracket(const LieAlgebra& L, const QMatrix& phi) {
    NijenhuisTable N = nijenhuis_torsion(L, phi);
    if (auto bad = N.first_nonzero()) {
        throw precondition_error("nonzero Nijenhuis torsion at basis pair (" + std::to_string(bad->i + 1) + "," +
                                 std::to_string(bad->j + 1) + ")");
    }
    int m = L.dim();
    LieAlgebra out(m, L.labels());
    auto basis = [&](int i) {
        QVec v(m, Rational(0));
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            QVec v = L.bracket(basis(i), apply_endo(phi, basis(j))) + L.bracket(apply_endo(phi, basis(i)), basis(j)) -
                     apply_endo(phi, L.bracket_basis(i, j));
            out.set_bracket(i, j, std::move(v));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// affine family: gl(V) x V, sl(V) x V, and the one-dimensional extension
// ---------------------------------------------------------------------------

namespace detail {

using Matrix = std::vector<QVec>;  // n x n, row major

inline Matrix zero_matrix(int n) { return Matrix(n, QVec(n, Rational(0))); }

inline Matrix mat_mul(const Matrix& A, const Matrix& B) {
    int n = static_cast<int>(A.size());
    Matrix C = zero_matrix(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (biham::is_zero(A[i][k])) continue;
            for (int j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

inline Matrix commutator(const Matrix& A, const Matrix& B) {
    Matrix P = mat_mul(A, B), Q = mat_mul(B, A);
    int n = static_cast<int>(P.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) P[i][j] -= Q[i][j];
    return P;
}

inline Rational mat_trace(const Matrix& A) {
    Rational t(0);
    for (size_t i = 0; i < A.size(); ++i) t += A[i][i];
    return t;
}

// basis of sl(n): off-diagonal units row-major, then consecutive diagonal
// differences
struct SlBasis {
    int n;
    std::vector<Matrix> mats;
    std::vector<std::string> names;

    explicit SlBasis(int n_) : n(n_) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                Matrix E = zero_matrix(n);
                E[i][j] = 1;
                mats.push_back(std::move(E));
                names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            }
        }
        for (int k = 0; k + 1 < n; ++k) {
            Matrix H = zero_matrix(n);
            H[k][k] = 1;
            H[k + 1][k + 1] = -1;
            mats.push_back(std::move(H));
            names.push_back("H" + std::to_string(k + 1));
        }
    }

    int dim() const { return n * n - 1; }

    // coordinates of a traceless matrix
    QVec coords(const Matrix& M) const {
        QVec out(dim(), Rational(0));
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                out[idx++] = M[i][j];
            }
        Rational run(0);
        for (int k = 0; k + 1 < n; ++k) {
            run += M[k][k];
            out[idx++] = run;
        }
        return out;
    }
};

}  // namespace detail

// gl(V) x V with basis (id, sl off-diagonals, sl diagonal differences,
// translations)
inline LieAlgebra affine_algebra(int n) {
    if (n < 2) throw value_error("affine algebra needs n >= 2");
    detail::SlBasis sl(n);
    int dim = n * n + n;
    std::vector<std::string> labels{"id"};
    for (const auto& nm : sl.names) labels.push_back(nm);
    for (int j = 1; j <= n; ++j) labels.push_back("v" + std::to_string(j));
    LieAlgebra L(dim, std::move(labels));

    int slo = 1, vo = n * n;  // offsets of the sl block and the translations
    auto gl_coords = [&](const detail::Matrix& M) {
        QVec out(dim, Rational(0));
        Rational idc = detail::mat_trace(M) / Rational(n);
        out[0] = idc;
        detail::Matrix M0 = M;
        for (int i = 0; i < n; ++i) M0[i][i] -= idc;
        QVec slc = sl.coords(M0);
        for (int k = 0; k < sl.dim(); ++k) out[slo + k] = slc[k];
        return out;
    };

    // [sl_a, sl_b]
    for (int a = 0; a < sl.dim(); ++a)
        for (int b = a + 1; b < sl.dim(); ++b)
            L.set_bracket(slo + a, slo + b, gl_coords(detail::commutator(sl.mats[a], sl.mats[b])));
    // [g, v_j] = g v_j;  [id, v_j] = v_j
    for (int a = 0; a < sl.dim(); ++a) {
        for (int j = 0; j < n; ++j) {
            QVec out(dim, Rational(0));
            bool nz = false;
            for (int i = 0; i < n; ++i) {
                out[vo + i] = sl.mats[a][i][j];
                nz = nz || !biham::is_zero(out[vo + i]);
            }
            if (nz) L.set_bracket(slo + a, vo + j, std::move(out));
        }
    }
    for (int j = 0; j < n; ++j) {
        QVec out(dim, Rational(0));
        out[vo + j] = 1;
        L.set_bracket(0, vo + j, std::move(out));
    }
    return L;
}

// sl(V) x V
inline LieAlgebra special_affine(int n) {
    if (n < 2) throw value_error("special affine algebra needs n >= 2");
    detail::SlBasis sl(n);
    int dim = n * n - 1 + n;
    std::vector<std::string> labels;
    for (const auto& nm : sl.names) labels.push_back(nm);
    for (int j = 1; j <= n; ++j) labels.push_back("v" + std::to_string(j));
    LieAlgebra L(dim, std::move(labels));
    int vo = n * n - 1;
    for (int a = 0; a < sl.dim(); ++a)
        for (int b = a + 1; b < sl.dim(); ++b) {
            QVec c = sl.coords(detail::commutator(sl.mats[a], sl.mats[b]));
            QVec out(dim, Rational(0));
            for (int k = 0; k < sl.dim(); ++k) out[k] = c[k];
            L.set_bracket(a, b, std::move(out));
        }
    for (int a = 0; a < sl.dim(); ++a) {
        for (int j = 0; j < n; ++j) {
            QVec out(dim, Rational(0));
            bool nz = false;
            for (int i = 0; i < n; ++i) {
                out[vo + i] = sl.mats[a][i][j];
                nz = nz || !biham::is_zero(out[vo + i]);
            }
            if (nz) L.set_bracket(a, vo + j, std::move(out));
        }
    }
    return L;
}

// the affine algebra extended by a one-dimensional ideal: [id, e] = -a e
inline LieAlgebra algebra_AVa(int n, const Rational& a) {
    LieAlgebra aff = affine_algebra(n);
    int dim = aff.dim() + 1;
    std::vector<std::string> labels = aff.labels();
    labels.push_back("e");
    LieAlgebra L(dim, std::move(labels));
    for (const auto& [ij, c] : aff.structure_constants()) {
        QVec out(dim, Rational(0));
        for (int k = 0; k < aff.dim(); ++k) out[k] = c[k];
        L.set_bracket(ij.first, ij.second, std::move(out));
    }
    QVec out(dim, Rational(0));
    out[dim - 1] = -a;
    L.set_bracket(0, dim - 1, std::move(out));  // [id, e] = -a e
    return L;
}

// Killing pairing of sl(n): kil(g, h) = 2n tr(gh); returns coordinates of
// kil(g, .) against the sl basis
inline QVec killing_oneform(const detail::Matrix& g, int n) {
    if (static_cast<int>(g.size()) != n) throw dimension_error("matrix size mismatch");
    if (!biham::is_zero(detail::mat_trace(g))) throw value_error("Killing pairing needs a traceless argument");
    detail::SlBasis sl(n);
    QVec out(sl.dim(), Rational(0));
    for (int k = 0; k < sl.dim(); ++k)
        out[k] = Rational(2 * n) * detail::mat_trace(detail::mat_mul(g, sl.mats[k]));
    return out;
}

struct Prop6Report {
    int dim = 0;   // dimension of the affine algebra
    int rank = 0;  // rank of d(alpha_g + tau)
    bool kernel_inside_sl_plus_v = true;
};

// rank of d(alpha_g + tau) on the affine algebra for diagonal g with the
// given eigenvalues and tau supported on the listed translation covectors
inline Prop6Report prop6_rank_suite(int n, const QVec& eigenvalues, const std::vector<int>& tau_support) {
    if (static_cast<int>(eigenvalues.size()) != n) throw dimension_error("need n eigenvalues");
    Rational sum(0);
    for (const auto& e : eigenvalues) sum += e;
    if (!biham::is_zero(sum)) throw value_error("eigenvalues must sum to zero");
    detail::Matrix g = detail::zero_matrix(n);
    for (int i = 0; i < n; ++i) g[i][i] = eigenvalues[i];
    LieAlgebra aff = affine_algebra(n);
    int dim = aff.dim();
    QVec xi(dim, Rational(0));
    QVec kg = killing_oneform(g, n);
    for (int k = 0; k < n * n - 1; ++k) xi[1 + k] = kg[k];
    for (int j : tau_support) {
        if (j < 1 || j > n) throw dimension_error("translation index out of range");
        xi[n * n + (j - 1)] = 1;
    }
    Exterior dxi = ce_d(aff, one_form(xi));
    Prop6Report rep;
    rep.dim = dim;
    QMatrix M = skew_matrix_at(dxi, QVec(dim, Rational(0)));
    rep.rank = qrank(M);
    for (const auto& v : qkernel(M)) {
        if (!biham::is_zero(v[0])) rep.kernel_inside_sl_plus_v = false;  // id-component escapes
    }
    return rep;
}

// ---------------------------------------------------------------------------
// scalar families with controlled collisions
// ---------------------------------------------------------------------------

struct ScalarFamilies {
    QVec a, b, c;
};

inline bool lemma9_verify(const ScalarFamilies& fam, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    size_t n = fam.a.size();
    if (fam.b.size() != n || fam.c.size() != n || n < 2) return fail("family sizes disagree");
    for (size_t i = 0; i < n; ++i) {
        if (biham::is_zero(fam.c[i])) return fail("zero entry in the third family");
        for (size_t j = i + 1; j < n; ++j) {
            if (fam.a[i] == fam.a[j]) return fail("first family has a repeat");
            if (fam.b[i] == fam.b[j]) return fail("second family has a repeat");
            if (fam.c[i] == fam.c[j]) return fail("third family has a repeat");
        }
    }
    Rational sa(0), sb(0);
    for (size_t i = 0; i < n; ++i) {
        sa += fam.a[i];
        sb += fam.b[i];
    }
    if (!biham::is_zero(sa) || !biham::is_zero(sb)) return fail("sums are not zero");
    std::vector<Rational> tij;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) tij.push_back((fam.a[i] - fam.a[j]) / (fam.b[i] - fam.b[j]));
    for (size_t p = 0; p < tij.size(); ++p)
        for (size_t q = p + 1; q < tij.size(); ++q)
            if (tij[p] == tij[q]) return fail("two collision parameters coincide");
    for (const auto& t : tij)
        for (const auto& c : fam.c)
            if (c * t == 1) return fail("a scalar of the third family hits a collision parameter");
    return true;
}

// deterministic search; the verifier is the contract
inline ScalarFamilies lemma9_families(int n) {
    if (n < 2) throw value_error("need n >= 2");
    Rng rng(424243);
    for (int attempt = 0; attempt < 200; ++attempt) {
        ScalarFamilies fam;
        fam.a.resize(n);
        fam.b.resize(n);
        Rational sa(0), sb(0);
        for (int i = 0; i < n; ++i) {
            fam.a[i] = attempt == 0 ? Rational(i) : Rational(rng.uniform(-8 * n, 8 * n));
            Rational bi;
            if (attempt == 0) {
                bi = 1;
                for (int k = 0; k < i; ++k) bi *= 4;
            } else {
                bi = Rational(rng.uniform(-16 * n, 16 * n));
            }
            fam.b[i] = bi;
            sa += fam.a[i];
            sb += fam.b[i];
        }
        sa /= n;
        sb /= n;
        for (int i = 0; i < n; ++i) {
            fam.a[i] -= sa;
            fam.b[i] -= sb;
        }
        // pick integer c's above every |1/t_ij|
        bool ok = true;
        Rational bound(0);
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                if (fam.a[i] == fam.a[j] || fam.b[i] == fam.b[j]) {
                    ok = false;
                    break;
                }
                Rational t = (fam.a[i] - fam.a[j]) / (fam.b[i] - fam.b[j]);
                if (biham::is_zero(t)) {
                    ok = false;
                    break;
                }
                Rational inv = abs(Rational(1) / t);
                if (inv > bound) bound = inv;
            }
        if (!ok) continue;
        Integer floor_bound = bound.get_num() / bound.get_den();
        long start = floor_bound.get_si() + 2;
        fam.c.resize(n);
        for (int i = 0; i < n; ++i) fam.c[i] = Rational(start + i);
        if (lemma9_verify(fam)) return fam;
    }
    throw value_error("internal: scalar family search failed");
}

// ---------------------------------------------------------------------------
// products and the two pencil factories
// ---------------------------------------------------------------------------

inline LieAlgebra product_algebra(const LieAlgebra& L1, const LieAlgebra& L2) {
    int m1 = L1.dim(), m2 = L2.dim();
    std::vector<std::string> labels = L1.labels();
    for (const auto& nm : L2.labels()) labels.push_back(nm + "'");
    LieAlgebra P(m1 + m2, std::move(labels));
    for (const auto& [ij, c] : L1.structure_constants()) {
        QVec out(m1 + m2, Rational(0));
        for (int k = 0; k < m1; ++k) out[k] = c[k];
        P.set_bracket(ij.first, ij.second, std::move(out));
    }
    for (const auto& [ij, c] : L2.structure_constants()) {
        QVec out(m1 + m2, Rational(0));
        for (int k = 0; k < m2; ++k) out[m1 + k] = c[k];
        P.set_bracket(m1 + ij.first, m1 + ij.second, std::move(out));
    }
    return P;
}

// two-dimensional non-abelian algebra [f1, f2] = f1
inline LieAlgebra affine_line_algebra() {
    LieAlgebra A(2, {"f1", "f2"});
    A.set_bracket(0, 1, QVec{Rational(1), Rational(0)});
    return A;
}

struct ConstructedPencil {
    Pencil pencil;
    QVec base_point;
    LieAlgebra algebra;  // the algebra carrying the pencil
    QVec rho;            // only for the secondary construction
};

// Casimir curve of d(alpha) + t d(beta): a polynomial curve spanning the
// kernel, primitive in t, with deterministic sign
inline std::vector<QVec> casimir_curve(const LieAlgebra& L, const QVec& alpha, const QVec& beta) {
    int m = L.dim();
    std::vector<std::vector<Poly>> D(m, std::vector<Poly>(m, Poly::zero(1)));
    for (const auto& [ij, cs] : L.structure_constants()) {
        Rational va(0), vb(0);
        for (int k = 0; k < m; ++k) {
            va += alpha[k] * cs[k];
            vb += beta[k] * cs[k];
        }
        Poly entry = Poly::constant(1, -va) + Poly::var(1, 0) * (-vb);
        D[ij.first][ij.second] = entry;
        D[ij.second][ij.first] = -entry;
    }
    // adjugate column: kernel vector of a corank-one matrix
    for (int j0 = 0; j0 < m; ++j0) {
        std::vector<UniPoly> kv(m);
        bool nonzero = false;
        for (int i = 0; i < m; ++i) {
            std::vector<std::vector<Poly>> minor;
            minor.reserve(m - 1);
            for (int r = 0; r < m; ++r) {
                if (r == j0) continue;
                std::vector<Poly> row;
                row.reserve(m - 1);
                for (int c = 0; c < m; ++c) {
                    if (c == i) continue;
                    row.push_back(D[r][c]);
                }
                minor.push_back(std::move(row));
            }
            Poly det = bareiss_det(std::move(minor));
            UniPoly u = det.as_unipoly();
            if ((i + j0) % 2 == 1) u = -u;
            if (!u.is_zero()) nonzero = true;
            kv[i] = std::move(u);
        }
        if (!nonzero) continue;
        // primitive in t: divide by the monic gcd of all entries
        UniPoly g;
        bool first = true;
        for (const auto& u : kv) {
            if (u.is_zero()) continue;
            g = first ? u.monic() : unipoly_gcd(g, u);
            first = false;
        }
        if (g.degree() > 0)
            for (auto& u : kv) u = unipoly_divexact(u, g);
        int deg = 0;
        for (const auto& u : kv) deg = std::max(deg, u.degree());
        std::vector<QVec> curve(deg + 1, QVec(m, Rational(0)));
        for (int i = 0; i < m; ++i)
            for (int d = 0; d <= kv[i].degree(); ++d) curve[d][i] = kv[i][d];
        // deterministic sign: first nonzero coordinate of the constant term positive
        for (int i = 0; i < m; ++i) {
            if (biham::is_zero(curve[0][i])) continue;
            if (sgn(curve[0][i]) < 0)
                for (auto& a : curve)
                    for (auto& q : a) q = -q;
            break;
        }
        return curve;
    }
    throw value_error("internal: adjugate of the pencil matrix vanished");
}

// Non-flat generic linear pair on the dual of the secondary algebra, based
// at (rho, alpha, 0) with the second member frozen at (0, beta, 0).
inline ConstructedPencil prop4_pencil(const LieAlgebra& L, const QVec& alpha, const QVec& beta) {
    int m = L.dim();
    if (m % 2 == 0) throw dimension_error("odd dimension required");
    int n = (m + 1) / 2;
    GenericCoupleReport couple = generic_couple_check(L, alpha, beta);
    if (!couple.generic) throw precondition_error("the pair of covectors is not a generic couple: " + couple.reason);
    if (!contact_check(beta, L)) throw precondition_error("beta must be a contact form");
    (void)n;

    std::vector<QVec> curve = casimir_curve(L, alpha, beta);
    int d = static_cast<int>(curve.size()) - 1;
    QMatrix C(d + 1, m, Rational(0));
    for (int r = 0; r <= d; ++r)
        for (int i = 0; i < m; ++i) C.at(r, i) = curve[r][i];
    QVec rhs(d + 1, Rational(0));
    rhs[0] = 1;
    auto rho = qsolve(C, rhs);
    if (!rho) throw precondition_error("the Casimir-curve coefficients admit no dual vector");

    LieAlgebra B = secondary_algebra(L);
    int M = B.dim();
    Exterior LB = lie_poisson(B);
    QVec freeze(M, Rational(0));
    for (int k = 0; k < m; ++k) freeze[m + k] = beta[k];
    Exterior L1const = LB.eval_at(freeze);
    // as a constant 2-cocycle on the secondary algebra
    Exterior coc(M, 2, ExtKind::Form, M);
    for (const auto& [idx, c] : L1const.components()) coc.add_term(idx, Poly::constant(M, c.constant_value()));

    ConstructedPencil out{Pencil::linear_pair(B, coc), QVec(M, Rational(0)), B, *rho};
    for (int k = 0; k < m; ++k) out.base_point[k] = (*rho)[k];
    for (int k = 0; k < m; ++k) out.base_point[m + k] = alpha[k];
    return out;
}

// Non-flat generic Lie pair on the dual of L x aff(1), deformed along
// phi = f1 (x) beta, based at alpha + f1*.
inline ConstructedPencil prop7_pencil(const LieAlgebra& L, const QVec& alpha, const QVec& beta) {
    int m = L.dim();
    if (m % 2 == 0) throw dimension_error("odd dimension required");
    if (is_unimodular(L)) throw precondition_error("the algebra must be non-unimodular");
    if (!contact_check(beta, L)) throw precondition_error("beta must be a contact form");
    Exterior da = ce_d(L, one_form(alpha));
    Exterior db = ce_d(L, one_form(beta));
    if (!pencil_power_certificate(da, db).generic)
        throw precondition_error("the differentials do not form a generic couple");

    LieAlgebra B = product_algebra(L, affine_line_algebra());
    int M = B.dim();
    QMatrix phi(M, M, Rational(0));
    for (int k = 0; k < m; ++k) phi.at(m, k) = beta[k];  // w -> beta(w) f1
    NijenhuisTable N = nijenhuis_torsion(B, phi);
    if (!N.is_zero()) throw precondition_error("unexpected nonzero torsion");
    LieAlgebra B1 = deformed_bracket(B, phi);

    ConstructedPencil out{Pencil::lie_pair(B, B1), QVec(M, Rational(0)), B, {}};
    for (int k = 0; k < m; ++k) out.base_point[k] = alpha[k];
    out.base_point[m] = 1;  // + f1*
    return out;
}

}  // namespace biham
