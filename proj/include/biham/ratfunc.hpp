#pragma once

#include "biham/poly.hpp"

#include <string>
#include <utility>

namespace biham {

// Rational function num/den over Poly. Normalization: the denominator is
// integer-primitive with positive leading coefficient, and any common
// monomial factor plus rational content is cancelled. Full polynomial-gcd
// cancellation is deliberately out of scope; equality is decided by
// cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(0), den_(Poly::constant(0, Rational(1))) {}
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.num_vars(), Rational(1))) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.num_vars() != den_.num_vars()) throw dimension_error("numerator/denominator variable counts differ");
        if (den_.is_zero()) throw value_error("zero denominator");
        normalize();
    }

    static RatFunc zero(int nvars) { return RatFunc(Poly::zero(nvars)); }
    static RatFunc constant(int nvars, const Rational& c) { return RatFunc(Poly::constant(nvars, c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int num_vars() const { return num_.num_vars(); }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RatFunc& o) const { return (num_ * o.den_) == (o.num_ * den_); }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator+(const RatFunc& o) const {
        if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw value_error("division by zero rational function");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }

    // (n/d)' = (n'd - nd')/d^2
    RatFunc partial_derivative(int var) const {
        return RatFunc(num_.partial_derivative(var) * den_ - num_ * den_.partial_derivative(var), den_ * den_);
    }

    std::string str(const std::vector<std::string>& names) const {
        if (den_.is_constant() && den_.constant_value() == 1) return poly_str(num_, names);
        return "(" + poly_str(num_, names) + ")/(" + poly_str(den_, names) + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly::constant(num_.num_vars(), Rational(1));
            return;
        }
        int n = num_.num_vars();
        // cancel common monomial factor
        Exps mn(n, ~0u), md(n, ~0u);
        for (const auto& [e, c] : num_.terms()) {
            (void)c;
            for (int k = 0; k < n; ++k) mn[k] = std::min(mn[k], e[k]);
        }
        for (const auto& [e, c] : den_.terms()) {
            (void)c;
            for (int k = 0; k < n; ++k) md[k] = std::min(md[k], e[k]);
        }
        Exps common(n);
        bool any = false;
        for (int k = 0; k < n; ++k) {
            common[k] = std::min(mn[k], md[k]);
            any = any || common[k] > 0;
        }
        if (any) {
            Poly mono = Poly::monomial(n, common, Rational(1));
            num_ = *poly_divexact(num_, mono);
            den_ = *poly_divexact(den_, mono);
        }
        Rational c = poly_content(den_);
        num_ = num_ * (Rational(1) / c);
        den_ = den_ * (Rational(1) / c);
    }

    Poly num_, den_;
};

}  // namespace biham
