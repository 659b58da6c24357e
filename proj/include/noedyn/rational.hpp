#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

namespace noedyn {

/// Exact rational scalar. GMP keeps values canonical (gcd(num, den) = 1,
/// den >= 1), which the rest of the library relies on for literal equality.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

/// Serializes as "p/q", or "p" when the denominator is 1. This format is
/// shared with the CLI JSON schema.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline int sign(const Rational& r) { return sgn(r); }

inline Rational abs_val(const Rational& r) { return abs(r); }

/// Decimal rendering with `digits` fractional digits (round half up).
inline std::string to_decimal(const Rational& r, int digits) {
    mpz_class num = r.get_num(), den = r.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = (2 * num * scale + den) / (2 * den);  // round half up
    mpz_class ip = scaled / scale, fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = ip.get_str() + "." + frac;
    if (neg && (ip != 0 || fp != 0)) out.insert(0, "-");
    return out;
}

}  // namespace noedyn

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    using Real = mpq_class;
    using NonInteger = mpq_class;
    using Nested = mpq_class;
    using Literal = long;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen
