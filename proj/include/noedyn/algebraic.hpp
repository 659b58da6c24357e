#pragma once

#include "noedyn/polynomial.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace noedyn {

/// Sturm chain of p (signed remainder sequence).
class SturmSequence {
  public:
    explicit SturmSequence(const Polynomial& p);

    /// Sign variations at a rational point.
    int variations_at(const Rational& x) const;
    /// Sign variations at -inf / +inf.
    int variations_at_minus_inf() const;
    int variations_at_plus_inf() const;

    /// Number of distinct real roots in the half-open interval (a, b], a < b.
    int count_half_open(const Rational& a, const Rational& b) const;
    /// Number of distinct real roots in the open interval (a, b).
    int count_open(const Rational& a, const Rational& b) const;
    /// Number of distinct real roots on the whole line.
    int count_all() const;
    /// Distinct real roots in (a, +inf).
    int count_above(const Rational& a) const;
    /// Distinct real roots in (-inf, b).
    int count_below(const Rational& b) const;

    const Polynomial& poly() const { return chain_.front(); }

  private:
    std::vector<Polynomial> chain_;
};

struct IsolatedRoot {
    Rational lo, hi;    // lo == hi encodes an exact rational root
    int multiplicity;
};

/// Disjoint isolating intervals for all distinct real roots of p, with exact
/// multiplicities from the squarefree decomposition. Exact rational roots are
/// returned as degenerate intervals. Throws on the zero polynomial.
std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p);

/// Cauchy bound: all real roots of p lie in (-B, B).
Rational root_bound(const Polynomial& p);

/// A real algebraic number: a squarefree modulus together with a rational
/// interval certified to contain exactly one of its real roots. The interval
/// is refined in place as sign decisions demand; the represented number never
/// changes.
class AlgebraicNumber {
  public:
    AlgebraicNumber(Polynomial modulus, Rational lo, Rational hi);
    /// An exact rational value r (modulus x - r, degenerate interval).
    explicit AlgebraicNumber(const Rational& r);

    const Polynomial& modulus() const { return modulus_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool is_rational() const { return lo_ == hi_; }

    /// One bisection step; keeps the one-root certificate.
    void refine();
    void refine_to_width(const Rational& w);

    /// Exact sign of g evaluated at this number. Zero is decided by a gcd
    /// test, nonzero signs by interval refinement.
    int sign_of(const Polynomial& g);

    /// Exact comparison with a rational.
    int compare(const Rational& r);

    /// Replaces the modulus by the given monic divisor, which must still
    /// vanish at the represented root. Used when field arithmetic discovers
    /// a zero divisor (the modulus need not be irreducible).
    void reduce_modulus(const Polynomial& factor);

    /// Decimal approximation with the stated number of digits.
    std::string decimal(int digits);

    double to_double();

  private:
    int sign_at(const Rational& x) const;  // sign of modulus at x

    Polynomial modulus_;  // squarefree, monic
    Rational lo_, hi_;
};

using AlgebraicNumberPtr = std::shared_ptr<AlgebraicNumber>;

/// Greatest real root of p as a certified algebraic number (modulus = the
/// squarefree part of p). Throws if p has no real root.
AlgebraicNumber largest_real_root(const Polynomial& p);

/// Exact multiplicity of alpha as a root of p (0 when p(alpha) != 0).
int root_multiplicity(const Polynomial& p, AlgebraicNumber& alpha);

}  // namespace noedyn
