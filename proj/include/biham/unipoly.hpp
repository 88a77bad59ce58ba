#pragma once

#include "biham/rational.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace biham {

// Dense univariate polynomial over Rational in one parameter (called t
// throughout). Coefficients indexed by degree; the vector is kept trimmed so
// the leading coefficient of a nonzero polynomial is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(QVec coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& a) { return UniPoly(QVec{a}); }
    static UniPoly t() { return UniPoly(QVec{Rational(0), Rational(1)}); }
    // c0 + c1 t + ... given as initializer-friendly longs
    static UniPoly from(std::vector<long> coeffs) {
        QVec v;
        for (long x : coeffs) v.push_back(Rational(x));
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& operator[](size_t i) const {
        static const Rational z(0);
        return i < c_.size() ? c_[i] : z;
    }
    const QVec& coeffs() const { return c_; }

    const Rational& leading() const {
        if (is_zero()) throw value_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator+(const UniPoly& o) const {
        QVec r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return UniPoly(std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const {
        QVec r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        QVec r = c_;
        for (auto& x : r) x = -x;
        return UniPoly(std::move(r));
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        QVec r(c_.size() + o.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly operator*(const Rational& a) const {
        QVec r = c_;
        for (auto& x : r) x *= a;
        return UniPoly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        QVec r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading());
    }

    // quotient and remainder of exact fraction-field division
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw value_error("division by zero polynomial");
        UniPoly q, r = *this;
        QVec qc(r.degree() >= d.degree() ? r.degree() - d.degree() + 1 : 0, Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational f = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            qc[shift] = f;
            QVec rc = r.c_;
            for (size_t i = 0; i < d.c_.size(); ++i) rc[i + shift] -= f * d.c_[i];
            rc.pop_back();
            r = UniPoly(std::move(rc));
        }
        return {UniPoly(std::move(qc)), r};
    }

    UniPoly shifted(int k) const {  // multiply by t^k
        if (is_zero() || k == 0) return *this;
        QVec r(c_.size() + k, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return UniPoly(std::move(r));
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (biham::is_zero(c_[i])) continue;
            Rational a = c_[i];
            if (!out.empty()) {
                out += sgn(a) < 0 ? " - " : " + ";
                if (sgn(a) < 0) a = -a;
            }
            bool unit = (a == 1) && i > 0;
            if (!unit) out += rat_str(a);
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && biham::is_zero(c_.back())) c_.pop_back();
    }

    QVec c_;
};

// Monic gcd. gcd(0, 0) is an error per the operation contract.
inline UniPoly unipoly_gcd(UniPoly f, UniPoly g) {
    if (f.is_zero() && g.is_zero()) throw value_error("gcd of two zero polynomials is undefined");
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

inline UniPoly unipoly_divexact(const UniPoly& f, const UniPoly& g) {
    auto [q, r] = f.divmod(g);
    if (!r.is_zero()) throw value_error("inexact univariate division");
    return q;
}

// extended gcd: returns (g, s, u) monic with s*f + u*h = g
inline std::tuple<UniPoly, UniPoly, UniPoly> unipoly_xgcd(const UniPoly& f, const UniPoly& h) {
    UniPoly r0 = f, r1 = h;
    UniPoly s0 = UniPoly::constant(Rational(1)), s1;
    UniPoly u0, u1 = UniPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UniPoly s2 = s0 - q * s1, u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) throw value_error("xgcd of zero polynomials");
    Rational inv = Rational(1) / r0.leading();
    return {r0 * inv, s0 * inv, u0 * inv};
}

inline UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero() || f.degree() == 0) return f.monic();
    UniPoly d = f.derivative();
    if (d.is_zero()) return f.monic();
    return unipoly_divexact(f, unipoly_gcd(f, d)).monic();
}

namespace detail {

inline void factor_integer(Integer n, std::vector<Integer>& primes) {
    n = abs(n);
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.push_back(Integer(p));
            n /= p;
        }
    }
    Integer d(7);
    // wheel-free trial division; inputs in this artifact stay small
    while (d * d <= n) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            primes.push_back(d);
            n /= d;
        } else {
            d += 2;
        }
    }
    if (n > 1) primes.push_back(n);
}

inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> primes;
    factor_integer(n, primes);
    std::vector<Integer> divs{Integer(1)};
    size_t i = 0;
    while (i < primes.size()) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        size_t mult = j - i;
        size_t base = divs.size();
        Integer pw(1);
        for (size_t e = 1; e <= mult; ++e) {
            pw *= primes[i];
            for (size_t k = 0; k < base; ++k) divs.push_back(divs[k] * pw);
        }
        i = j;
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

// scale to integer coefficients, content 1, positive leading coefficient
inline UniPoly integer_primitive(const UniPoly& f) {
    if (f.is_zero()) return f;
    Integer den_lcm(1);
    for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    Integer num_gcd(0);
    for (const auto& c : f.coeffs()) num_gcd = gcd(num_gcd, c.get_num() * (den_lcm / c.get_den()));
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    UniPoly g = f * scale;
    if (sgn(g.leading()) < 0) g = -g;
    return g;
}

}  // namespace detail

// All rational roots, each listed once, ascending; remainder is the
// rational-root-free cofactor of the squarefree part.
struct RationalRoots {
    std::vector<Rational> roots;
    UniPoly rootfree;  // squarefree, monic, no rational roots
};

inline RationalRoots rational_roots(const UniPoly& f) {
    RationalRoots out;
    if (f.is_zero()) throw value_error("rational roots of the zero polynomial");
    UniPoly s = squarefree_part(f);
    if (s.degree() == 0) {
        out.rootfree = UniPoly::constant(Rational(1));
        return out;
    }
    // strip t^k
    size_t val = 0;
    while (biham::is_zero(s[val])) ++val;
    if (val > 0) {
        out.roots.push_back(Rational(0));
        QVec shifted(s.coeffs().begin() + val, s.coeffs().end());
        s = UniPoly(std::move(shifted));
    }
    if (s.degree() > 0) {
        UniPoly p = detail::integer_primitive(s);
        Integer a0 = p[0].get_num();  // integer poly, so den = 1
        Integer an = p.leading().get_num();
        for (const Integer& num : detail::divisors(a0)) {
            for (const Integer& den : detail::divisors(an)) {
                for (int sign : {1, -1}) {
                    Rational cand(sign * num, den);
                    cand.canonicalize();
                    if (biham::is_zero(p.eval(cand))) {
                        out.roots.push_back(cand);
                        UniPoly lin(QVec{-cand, Rational(1)});
                        p = unipoly_divexact(p, lin);
                    }
                }
            }
            if (p.degree() == 0) break;
        }
        s = p.monic();
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.rootfree = s.degree() > 0 ? s : UniPoly::constant(Rational(1));
    return out;
}

}  // namespace biham
