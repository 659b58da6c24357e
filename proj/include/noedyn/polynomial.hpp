#pragma once

#include "noedyn/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace noedyn {

/// Univariate polynomial over Q, coefficients lowest degree first. The zero
/// polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& a) { return Polynomial(std::vector<Rational>{a}); }
    /// x - r
    static Polynomial linear_root(const Rational& r) {
        return Polynomial(std::vector<Rational>{-r, Rational(1)});
    }
    /// x^n
    static Polynomial monomial(int n, const Rational& coeff = Rational(1)) {
        std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
        c.back() = coeff;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const Rational& leading() const { return c_.back(); }

    Rational coeff(int i) const {
        if (i < 0 || i > degree()) return Rational(0);
        return c_[static_cast<size_t>(i)];
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        std::vector<Rational> r(c_);
        for (auto& x : r) x = -x;
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& p) {
        std::vector<Rational> r(p.c_);
        for (auto& x : r) x *= s;
        return Polynomial(std::move(r));
    }

    Rational eval(const Rational& x) const {  // Horner
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
        return acc;
    }

    /// Encloses {p(x) : x in [lo, hi]} with interval Horner.
    std::pair<Rational, Rational> eval_interval(const Rational& lo, const Rational& hi) const {
        Rational alo(0), ahi(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            // [alo, ahi] * [lo, hi] + coeff
            Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
            Rational nlo = std::min(std::min(p1, p2), std::min(p3, p4));
            Rational nhi = std::max(std::max(p1, p2), std::max(p3, p4));
            alo = nlo + *it;
            ahi = nhi + *it;
        }
        return {alo, ahi};
    }

    Polynomial derivative() const {
        if (degree() <= 0) return Polynomial();
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Rational inv = 1 / leading();
        return inv * *this;
    }

    /// Euclidean division; divisor must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
        std::vector<Rational> rem(a.c_);
        int db = b.degree();
        if (a.degree() < db) return {Polynomial(), a};
        std::vector<Rational> quot(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
        Rational inv_lead = 1 / b.leading();
        for (int i = a.degree(); i >= db; --i) {
            Rational q = rem[static_cast<size_t>(i)] * inv_lead;
            if (q == 0) continue;
            quot[static_cast<size_t>(i - db)] = q;
            for (int j = 0; j <= db; ++j)
                rem[static_cast<size_t>(i - db + j)] -= q * b.c_[static_cast<size_t>(j)];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        return divmod(a, b).first;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        return divmod(a, b).second;
    }

    std::string str(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd over Q.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
inline std::tuple<Polynomial, Polynomial, Polynomial> poly_xgcd(const Polynomial& a,
                                                                const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(Rational(1)), s1;
    Polynomial t0, t1 = Polynomial::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

/// p with repeated roots collapsed: p / gcd(p, p'), monic.
inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p.monic();
    return (p / poly_gcd(p, p.derivative())).monic();
}

/// Yun's squarefree decomposition: p ~ prod f_k^k with the f_k squarefree
/// and pairwise coprime. Returns the list of (f_k, k) with deg f_k >= 1.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

std::string poly_to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace noedyn
