#pragma once

#include "biham/constructions.hpp"
#include "biham/liealg.hpp"
#include "biham/pencil.hpp"

#include <utility>
#include <vector>

namespace biham {
namespace catalog {

// five-dimensional solvable algebra with brackets
// [e1,e5] = e5, [e2,e3] = e3, [e2,e4] = -e4
inline LieAlgebra example2_algebra() {
    LieAlgebra L(5);
    QVec v(5, Rational(0));
    v[4] = 1;
    L.set_bracket(0, 4, v);
    v.assign(5, Rational(0));
    v[2] = 1;
    L.set_bracket(1, 2, v);
    v.assign(5, Rational(0));
    v[3] = -1;
    L.set_bracket(1, 3, v);
    return L;
}

// the symplectic-looking cocycle e1*^e2* + e3*^e4*
inline Exterior example2_cocycle() {
    Exterior b(5, 2, ExtKind::Form);
    b.add_term({0, 1}, Poly::constant(5, Rational(1)));
    b.add_term({2, 3}, Poly::constant(5, Rational(1)));
    return b;
}

inline Pencil example2_pencil() { return Pencil::linear_pair(example2_algebra(), example2_cocycle()); }

// [e1,e2] = e3, [e1,e3] = a e2 + b e3, [e2,e3] = 0
inline LieAlgebra example3_algebra(const Rational& a, const Rational& b) {
    LieAlgebra L(3);
    QVec v(3, Rational(0));
    v[2] = 1;
    L.set_bracket(0, 1, v);
    v.assign(3, Rational(0));
    v[1] = a;
    v[2] = b;
    L.set_bracket(0, 2, v);
    return L;
}

// solvable family of dimension 2n-1:
// [e_{2j-1}, e_{2j}] = -e_{2j}, [e_{2j-1}, e_{2n-1}] = -a e_{2n-1}
inline LieAlgebra example4_algebra(int n, const Rational& a) {
    int m = 2 * n - 1;
    LieAlgebra L(m);
    for (int j = 1; j <= n - 1; ++j) {
        QVec v(m, Rational(0));
        v[2 * j - 1] = -1;
        L.set_bracket(2 * j - 2, 2 * j - 1, std::move(v));
        QVec w(m, Rational(0));
        w[m - 1] = -a;
        L.set_bracket(2 * j - 2, m - 1, std::move(w));
    }
    return L;
}

inline QVec example4_alpha(int n) {
    QVec a(2 * n - 1, Rational(0));
    for (int j = 1; j <= n - 1; ++j) a[2 * j - 1] = 1;
    return a;
}

inline QVec example4_beta(int n, const QVec& ascalars) {
    QVec b(2 * n - 1, Rational(0));
    for (int j = 1; j <= n - 1; ++j) b[2 * j - 1] = ascalars[j - 1];
    b[2 * n - 2] = 1;
    return b;
}

// the worked five-dimensional pair of linear bivector fields, as a pair of
// Lie algebras on the same space
inline LieAlgebra example_a_first() {
    LieAlgebra L(5);
    auto set = [&](int i, int j, int k, long c) {
        QVec v(5, Rational(0));
        v[k] = c;
        L.set_bracket(i, j, std::move(v));
    };
    set(0, 3, 1, 1);  // [e1,e4] = e2
    set(2, 3, 2, 1);  // [e3,e4] = e3
    set(0, 4, 0, 1);  // [e1,e5] = e1
    set(1, 4, 1, 1);  // [e2,e5] = e2
    set(2, 4, 2, 1);  // [e3,e5] = e3
    return L;
}

inline LieAlgebra example_a_second() {
    LieAlgebra L(5);
    auto set = [&](int i, int j, int k, long c) {
        QVec v(5, Rational(0));
        v[k] = c;
        L.set_bracket(i, j, std::move(v));
    };
    set(1, 3, 0, 1);  // [e2,e4] = e1
    set(0, 4, 0, 1);  // [e1,e5] = e1
    set(1, 4, 1, 1);  // [e2,e5] = e2
    return L;
}

inline Pencil example_a_pencil() { return Pencil::lie_pair(example_a_first(), example_a_second()); }

// non-unimodular three-dimensional algebra in the basis with the unimodular
// ideal spanned by e2, e3:
// [e1,e2] = a22 e2 + a23 e3, [e1,e3] = a32 e2 + a33 e3
inline LieAlgebra dim3_linear_algebra(const Rational& a22, const Rational& a23, const Rational& a32,
                                      const Rational& a33) {
    LieAlgebra L(3);
    QVec v(3, Rational(0));
    v[1] = a22;
    v[2] = a23;
    L.set_bracket(0, 1, std::move(v));
    QVec w(3, Rational(0));
    w[1] = a32;
    w[2] = a33;
    L.set_bracket(0, 2, std::move(w));
    return L;
}

// the unimodular second bracket of the three-dimensional normal form:
// [e1,e2]_1 = e3, [e1,e3]_1 = b e2
inline LieAlgebra dim3_lie_second(const Rational& b) {
    LieAlgebra L(3);
    QVec v(3, Rational(0));
    v[2] = 1;
    L.set_bracket(0, 1, std::move(v));
    QVec w(3, Rational(0));
    w[1] = b;
    L.set_bracket(0, 2, std::move(w));
    return L;
}

// truncated-algebra pencil with the second member frozen to the top cocycle
inline Pencil example1_pencil(int m) {
    LieAlgebra L = truncated_algebra(m);
    Exterior top = ce_d(L, one_form([&] {
                            QVec a(m, Rational(0));
                            a[m - 1] = 1;
                            return a;
                        }()));
    return Pencil::linear_pair(L, top);
}

inline QVec basis_covector(int m, int k) {  // e_{k+1}^* as a coordinate point
    QVec v(m, Rational(0));
    v[k] = 1;
    return v;
}

// deformed truncated pair of the nilpotent-shift construction
inline std::pair<Pencil, LieAlgebra> example8_pencil(int m) {
    LieAlgebra L = truncated_algebra(m);
    QMatrix phi(m, m, Rational(0));
    int n = (m + 1) / 2;
    phi.at(n - 1, m - 1) = 1;  // e_n (x) e_m^*
    LieAlgebra L1 = deformed_bracket(L, phi);
    return {Pencil::lie_pair(L, L1), L1};
}

}  // namespace catalog
}  // namespace biham
