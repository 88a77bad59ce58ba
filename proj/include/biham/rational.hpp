#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace biham {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator), which is what every equality test below relies on.
using Rational = mpq_class;
using Integer = mpz_class;

struct dimension_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct kind_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct value_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw value_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Serialized as "p/q", or "p" when the denominator is one.
inline std::string rat_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    try {
        Rational q(s);
        if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal '" + s + "'");
    }
}

using QVec = std::vector<Rational>;

inline bool is_zero(const QVec& v) {
    for (const auto& q : v)
        if (!is_zero(q)) return false;
    return true;
}

inline QVec operator+(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw dimension_error("vector sizes differ");
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec operator-(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw dimension_error("vector sizes differ");
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec operator*(const Rational& c, const QVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

// Deterministic PRNG (splitmix64); used everywhere randomness is needed so
// runs are reproducible under a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 12345) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform integer in [lo, hi]
    long uniform(long lo, long hi) {
        if (hi < lo) throw value_error("empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    Rational rational(long max_num, long max_den = 1) {
        long num = uniform(-max_num, max_num);
        long den = max_den > 1 ? uniform(1, max_den) : 1;
        return rat(num, den);
    }

    Rational nonzero_rational(long max_num, long max_den = 1) {
        for (;;) {
            Rational q = rational(max_num, max_den);
            if (!is_zero(q)) return q;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace biham
