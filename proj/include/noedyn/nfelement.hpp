#pragma once

#include "noedyn/algebraic.hpp"

#include <memory>
#include <string>

namespace noedyn {

/// An element of Q(lambda) represented by a polynomial in the generator,
/// reduced modulo the base modulus. The modulus is only required to be
/// squarefree; a zero-divisor hit during inversion triggers gcd refinement
/// of the shared base toward the factor vanishing at lambda.
///
/// A null base means a plain rational (degree-zero repr), which combines
/// freely with elements over any base.
class NFElement {
  public:
    NFElement() : repr_(Polynomial::zero()) {}
    explicit NFElement(const Rational& r) : repr_(Polynomial::constant(r)) {}
    NFElement(AlgebraicNumberPtr base, Polynomial repr);

    /// The generator lambda itself.
    static NFElement generator(const AlgebraicNumberPtr& base);

    const AlgebraicNumberPtr& base() const { return base_; }
    const Polynomial& repr() const { return repr_; }

    bool is_rational_literal() const { return repr_.degree() <= 0; }

    NFElement operator-() const;
    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator/(const NFElement& a, const NFElement& b);
    NFElement& operator+=(const NFElement& o) { return *this = *this + o; }
    NFElement& operator-=(const NFElement& o) { return *this = *this - o; }
    NFElement& operator*=(const NFElement& o) { return *this = *this * o; }
    NFElement& operator/=(const NFElement& o) { return *this = *this / o; }

    NFElement inverse() const;
    NFElement pow(int n) const;

    /// Exact sign at lambda.
    int sign() const;
    bool is_zero() const { return sign() == 0; }

    friend bool operator==(const NFElement& a, const NFElement& b) {
        return (a - b).sign() == 0;
    }
    friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

    /// High-precision midpoint evaluation (refines the base interval).
    double to_double() const;
    std::string decimal(int digits) const;

    std::string str() const;

  private:
    static AlgebraicNumberPtr merge_bases(const NFElement& a, const NFElement& b);
    void reduce();

    AlgebraicNumberPtr base_;  // null for plain rationals
    Polynomial repr_;
};

inline NFElement operator*(const Rational& s, const NFElement& e) { return NFElement(s) * e; }

/// Exact sign of e at lambda: {-1, 0, +1}.
inline int nf_sign(const NFElement& e) { return e.sign(); }

}  // namespace noedyn
