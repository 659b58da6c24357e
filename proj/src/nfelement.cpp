#include "noedyn/nfelement.hpp"

#include <stdexcept>

namespace noedyn {

NFElement::NFElement(AlgebraicNumberPtr base, Polynomial repr)
    : base_(std::move(base)), repr_(std::move(repr)) {
    reduce();
}

NFElement NFElement::generator(const AlgebraicNumberPtr& base) {
    return NFElement(base, Polynomial::monomial(1));
}

void NFElement::reduce() {
    if (base_ && repr_.degree() >= base_->modulus().degree())
        repr_ = repr_ % base_->modulus();
}

AlgebraicNumberPtr NFElement::merge_bases(const NFElement& a, const NFElement& b) {
    if (!a.base_) return b.base_;
    if (!b.base_) return a.base_;
    if (a.base_ != b.base_)
        throw std::invalid_argument("nf arithmetic: elements over different bases");
    return a.base_;
}

NFElement NFElement::operator-() const { return NFElement(base_, -repr_); }

NFElement operator+(const NFElement& a, const NFElement& b) {
    return NFElement(NFElement::merge_bases(a, b), a.repr_ + b.repr_);
}

NFElement operator-(const NFElement& a, const NFElement& b) {
    return NFElement(NFElement::merge_bases(a, b), a.repr_ - b.repr_);
}

NFElement operator*(const NFElement& a, const NFElement& b) {
    return NFElement(NFElement::merge_bases(a, b), a.repr_ * b.repr_);
}

NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }

NFElement NFElement::inverse() const {
    if (!base_) {
        if (repr_.is_zero()) throw std::domain_error("nf inverse: division by zero");
        return NFElement(Rational(1) / repr_.coeff(0));
    }
    NFElement e = *this;
    for (int attempt = 0; attempt < 64; ++attempt) {
        e.reduce();
        if (e.repr_.is_zero()) throw std::domain_error("nf inverse: division by zero");
        auto [g, s, t] = poly_xgcd(e.repr_, base_->modulus());
        if (g.degree() == 0) return NFElement(base_, s);
        // zero divisor: either the element vanishes at lambda, or the
        // modulus splits and we drop the factor not containing lambda
        if (base_->sign_of(g) == 0)
            throw std::domain_error("nf inverse: element vanishes at the generator");
        base_->reduce_modulus(base_->modulus() / g);
    }
    throw std::logic_error("nf inverse: modulus refinement did not terminate");
}

NFElement NFElement::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    NFElement acc(Rational(1));
    if (base_) acc = NFElement(base_, Polynomial::constant(Rational(1)));
    NFElement sq = *this;
    while (n > 0) {
        if (n & 1) acc = acc * sq;
        n >>= 1;
        if (n) sq = sq * sq;
    }
    return acc;
}

int NFElement::sign() const {
    if (!base_) return repr_.is_zero() ? 0 : sgn(repr_.coeff(0));
    Polynomial r = repr_;
    if (r.degree() >= base_->modulus().degree()) r = r % base_->modulus();
    return base_->sign_of(r);
}

double NFElement::to_double() const {
    if (!base_) return repr_.is_zero() ? 0.0 : repr_.coeff(0).get_d();
    base_->refine_to_width(Rational(mpz_class(1), mpz_class(1) << 100));
    return repr_.eval(base_->midpoint()).get_d();
}

std::string NFElement::decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits) + 4);
    Rational target(mpz_class(1), scale);
    if (!base_) return to_decimal(repr_.is_zero() ? Rational(0) : repr_.coeff(0), digits);
    for (int iter = 0; iter < 100000; ++iter) {
        auto [lo, hi] = repr_.eval_interval(base_->lo(), base_->hi());
        if (hi - lo <= target) return to_decimal((lo + hi) / 2, digits);
        if (base_->is_rational()) return to_decimal(repr_.eval(base_->lo()), digits);
        base_->refine();
    }
    throw std::logic_error("nf decimal: refinement budget exhausted");
}

std::string NFElement::str() const { return repr_.str("lambda"); }

}  // namespace noedyn
