#pragma once

#include "biham/rational.hpp"
#include "biham/unipoly.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace biham {

using Exps = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exps& e) {
    std::uint64_t s = 0;
    for (auto x : e) s += x;
    return s;
}

// Graded lexicographic order; fixed once so canonical forms and leading
// terms are well defined.
struct GradedLexLess {
    bool operator()(const Exps& a, const Exps& b) const {
        std::uint64_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;  // lexicographic tie-break
    }
};

// Sparse multivariate polynomial over Rational. Invariant: no stored
// coefficient is zero and every exponent vector has length num_vars.
class Poly {
public:
    using Terms = std::map<Exps, Rational, GradedLexLess>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rational& c) {
        Poly p(nvars);
        p.add_term(Exps(nvars, 0), c);
        return p;
    }
    static Poly var(int nvars, int i) {
        if (i < 0 || i >= nvars) throw dimension_error("variable index out of range");
        Poly p(nvars);
        Exps e(nvars, 0);
        e[i] = 1;
        p.add_term(e, Rational(1));
        return p;
    }
    static Poly monomial(int nvars, Exps e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars) throw dimension_error("exponent vector length mismatch");
        Poly p(nvars);
        p.add_term(std::move(e), c);
        return p;
    }

    int num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Rational constant_value() const {
        if (is_zero()) return Rational(0);
        if (!is_constant()) throw value_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    std::uint64_t degree() const {
        return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
    }

    const Exps& leading_exps() const {
        if (is_zero()) throw value_error("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }
    const Rational& leading_coeff() const {
        if (is_zero()) throw value_error("leading term of zero polynomial");
        return terms_.rbegin()->second;
    }

    void add_term(Exps e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_) throw dimension_error("exponent vector length mismatch");
        if (biham::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (biham::is_zero(it->second)) terms_.erase(it);
        }
    }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        check_vars(o);
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        check_vars(o);
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        check_vars(o);
        Poly r(nvars_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                Exps e(nvars_);
                for (int k = 0; k < nvars_; ++k) e[k] = e1[k] + e2[k];
                r.add_term(std::move(e), c1 * c2);
            }
        }
        return r;
    }
    Poly operator*(const Rational& a) const {
        if (biham::is_zero(a)) return Poly(nvars_);
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * a);
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Rational eval(const QVec& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw dimension_error("point size mismatch");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (int k = 0; k < nvars_; ++k) {
                for (std::uint32_t j = 0; j < e[k]; ++j) term *= point[k];
            }
            acc += term;
        }
        return acc;
    }

    // substitute point values for the first `prefix` variables, keeping the
    // remaining variables symbolic
    Poly eval_prefix(const QVec& point) const {
        size_t prefix = point.size();
        if (prefix > static_cast<size_t>(nvars_)) throw dimension_error("too many values");
        Poly r(nvars_ - static_cast<int>(prefix));
        for (const auto& [e, c] : terms_) {
            Rational coef = c;
            for (size_t k = 0; k < prefix; ++k)
                for (std::uint32_t j = 0; j < e[k]; ++j) coef *= point[k];
            Exps rest(e.begin() + prefix, e.end());
            r.add_term(std::move(rest), coef);
        }
        return r;
    }

    Poly partial_derivative(int var) const {
        if (var < 0 || var >= nvars_) throw dimension_error("variable index out of range");
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exps d = e;
            d[var] -= 1;
            r.add_term(std::move(d), c * Rational(static_cast<long>(e[var])));
        }
        return r;
    }

    // view a polynomial in one variable as a UniPoly
    UniPoly as_unipoly() const {
        QVec coeffs;
        for (const auto& [e, c] : terms_) {
            std::uint32_t deg = 0;
            for (int k = 0; k < nvars_; ++k) {
                if (e[k] > 0) {
                    if (deg > 0) throw value_error("polynomial is not univariate");
                    deg = e[k];
                }
            }
            if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
            coeffs[deg] = c;
        }
        // catch the nvars > 1 case where distinct variables appear
        int used = -1;
        for (const auto& [e, c] : terms_) {
            (void)c;
            for (int k = 0; k < nvars_; ++k) {
                if (e[k] > 0) {
                    if (used == -1) used = k;
                    if (used != k) throw value_error("polynomial is not univariate");
                }
            }
        }
        return UniPoly(std::move(coeffs));
    }

    // widen to more variables; existing variables keep their indices
    Poly widened(int new_nvars) const {
        if (new_nvars < nvars_) throw dimension_error("cannot shrink variable count");
        Poly r(new_nvars);
        for (const auto& [e, c] : terms_) {
            Exps w(new_nvars, 0);
            std::copy(e.begin(), e.end(), w.begin());
            r.terms_.emplace(std::move(w), c);
        }
        return r;
    }

private:
    void check_vars(const Poly& o) const {
        if (nvars_ != o.nvars_) throw dimension_error("polynomial variable counts differ");
    }

    int nvars_;
    Terms terms_;
};

inline Poly operator*(const Rational& a, const Poly& p) { return p * a; }

// Exact division; empty when g does not divide f. With a multiplicative
// monomial order the leading term of the running remainder must always be
// divisible by lt(g) when g | f, so a single reduction loop decides.
inline std::optional<Poly> poly_divexact(const Poly& f, const Poly& g) {
    if (f.num_vars() != g.num_vars()) throw dimension_error("polynomial variable counts differ");
    if (g.is_zero()) throw value_error("division by zero polynomial");
    int n = f.num_vars();
    Poly q(n), r = f;
    while (!r.is_zero()) {
        const Exps& le = r.leading_exps();
        const Exps& ge = g.leading_exps();
        Exps d(n);
        for (int k = 0; k < n; ++k) {
            if (le[k] < ge[k]) return std::nullopt;
            d[k] = le[k] - ge[k];
        }
        Poly m = Poly::monomial(n, std::move(d), r.leading_coeff() / g.leading_coeff());
        q += m;
        r -= m * g;
    }
    return q;
}

// content: rational c with f = c * (integer-primitive, positive-leading);
// zero polynomial has content 0
inline Rational poly_content(const Poly& f) {
    if (f.is_zero()) return Rational(0);
    Integer den_lcm(1);
    for (const auto& [e, c] : f.terms()) {
        (void)e;
        den_lcm = lcm(den_lcm, c.get_den());
    }
    Integer num_gcd(0);
    for (const auto& [e, c] : f.terms()) {
        (void)e;
        num_gcd = gcd(num_gcd, c.get_num() * (den_lcm / c.get_den()));
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(f.leading_coeff()) < 0) content = -content;
    return content;
}

inline Poly poly_primitive(const Poly& f) {
    if (f.is_zero()) return f;
    return f * (Rational(1) / poly_content(f));
}

inline std::string poly_str(const Poly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    // leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rational c = it->second;
        if (!out.empty()) {
            out += sgn(c) < 0 ? " - " : " + ";
            if (sgn(c) < 0) c = -c;
        } else if (sgn(c) < 0) {
            out += "-";
            c = -c;
        }
        std::string mono;
        for (size_t k = 0; k < it->first.size(); ++k) {
            if (it->first[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += k < names.size() ? names[k] : "v" + std::to_string(k + 1);
            if (it->first[k] > 1) mono += "^" + std::to_string(it->first[k]);
        }
        if (mono.empty()) {
            out += rat_str(c);
        } else {
            if (c != 1) out += rat_str(c) + "*";
            out += mono;
        }
    }
    return out;
}

inline std::vector<std::string> coord_names(int m, const std::string& stem = "x") {
    std::vector<std::string> names;
    names.reserve(m);
    for (int i = 1; i <= m; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

}  // namespace biham
