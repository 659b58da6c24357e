#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "noedyn/algebraic.hpp"
#include "noedyn/matrix.hpp"
#include "noedyn/nfelement.hpp"
#include "noedyn/polynomial.hpp"

#include <random>
#include <vector>

using namespace noedyn;

namespace {

QMatrix mat_from(std::initializer_list<std::initializer_list<long>> rows) {
    QMatrix M(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long v : row) M(i, j++) = Rational(v);
        ++i;
    }
    return M;
}

// Independent oracle: cofactor-expansion determinant of xI - M with
// polynomial entries. Exponential, test-only.
Polynomial det_poly(std::vector<std::vector<Polynomial>> A) {
    size_t n = A.size();
    if (n == 1) return A[0][0];
    Polynomial det;
    for (size_t k = 0; k < n; ++k) {
        std::vector<std::vector<Polynomial>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(A[i][j]);
            minor.push_back(std::move(row));
        }
        Polynomial term = A[0][k] * det_poly(std::move(minor));
        det = (k % 2 == 0) ? det + term : det - term;
    }
    return det;
}

Polynomial char_poly_oracle(const QMatrix& M) {
    size_t n = static_cast<size_t>(M.rows());
    std::vector<std::vector<Polynomial>> A(n, std::vector<Polynomial>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            A[i][j] = Polynomial::constant(-M(static_cast<Eigen::Index>(i),
                                             static_cast<Eigen::Index>(j)));
            if (i == j) A[i][j] = A[i][j] + Polynomial::monomial(1);
        }
    return det_poly(std::move(A));
}

Rational rand_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
    return make_rational(num(rng), den(rng));
}

// The worked d=4 pullback matrix (S = {0,1}, N = (2,2)), basis
// (H, P01, P02, P11, P12); columns are images of the basis classes.
QMatrix d4_pullback() {
    QMatrix M = QMatrix::Constant(5, 5, Rational(0));
    M(0, 0) = 4; M(2, 0) = -3; M(4, 0) = -3;   // H -> 4H - 3P02 - 3P12
    M(0, 1) = 1; M(4, 1) = -1;                 // P01 -> H - P12
    M(1, 2) = 1;                               // P02 -> P01
    M(0, 3) = 1; M(2, 3) = -1;                 // P11 -> H - P02
    M(3, 4) = 1;                               // P12 -> P11
    return M;
}

}  // namespace

TEST_CASE("char_poly on the P^3 cubic-J matrix") {
    QMatrix M = mat_from({{3, 1, 1, 1}, {-2, 0, -1, -1}, {-1, -1, -1, 0}, {-1, -1, 0, -1}});
    Polynomial chi = char_poly(M);
    CHECK(chi == Polynomial({2, 1, -3, -1, 1}));  // x^4 - x^3 - 3x^2 + x + 2
    CHECK(chi == char_poly_oracle(M));
}

TEST_CASE("char_poly trivial and error cases") {
    CHECK(char_poly(identity_q(2)) == Polynomial({1, -2, 1}));  // (x-1)^2
    QMatrix bad(2, 3);
    CHECK_THROWS_AS(char_poly(bad), std::invalid_argument);
}

TEST_CASE("char_poly of the d=4 worked pullback matrix") {
    Polynomial chi = char_poly(d4_pullback());
    CHECK(chi == Polynomial({-2, -1, 6, 0, -4, 1}));  // x^5 - 4x^4 + 6x^2 - x - 2
    CHECK(chi == char_poly_oracle(d4_pullback()));
}

TEST_CASE("char_poly properties: monic degree n, block-triangular product") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> dim(1, 4);
        int na = dim(rng), nb = dim(rng);
        QMatrix A(na, na), B(nb, nb);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) A(i, j) = rand_rational(rng);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j) B(i, j) = rand_rational(rng);
        Polynomial pa = char_poly(A), pb = char_poly(B);
        CHECK(pa.degree() == na);
        CHECK(pa.leading() == 1);
        QMatrix T = QMatrix::Constant(na + nb, na + nb, Rational(0));
        T.topLeftCorner(na, na) = A;
        T.bottomRightCorner(nb, nb) = B;
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j) T(i, na + j) = rand_rational(rng);
        CHECK(char_poly(T) == pa * pb);
    }
}

TEST_CASE("isolate_real_roots: x^2 - 2") {
    auto roots = isolate_real_roots(Polynomial({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].multiplicity == 1);
    CHECK(roots[0].hi < 0);
    CHECK(roots[1].lo > 0);
}

TEST_CASE("isolate_real_roots: chi of the cubic-J example") {
    // (x-2)(x-1)(x+1)^2
    auto roots = isolate_real_roots(Polynomial({2, 1, -3, -1, 1}));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].lo == roots[0].hi);
    CHECK(roots[0].lo == -1);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].lo == 1);
    CHECK(roots[1].multiplicity == 1);
    CHECK(roots[2].lo == 2);
    CHECK(roots[2].multiplicity == 1);
}

TEST_CASE("isolate_real_roots: largest root of the d=4 chi inside (7/2, 18/5)") {
    Polynomial chi({-2, -1, 6, 0, -4, 1});
    auto roots = isolate_real_roots(chi);
    REQUIRE(!roots.empty());
    AlgebraicNumber lam = largest_real_root(chi);
    CHECK(lam.compare(make_rational(7, 2)) > 0);
    CHECK(lam.compare(make_rational(18, 5)) < 0);
    CHECK_THROWS_AS(isolate_real_roots(Polynomial::zero()), std::invalid_argument);
}

TEST_CASE("isolation properties: disjointness, Sturm count, refinement") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> deg(1, 6);
        std::vector<Rational> cs;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) cs.push_back(rand_rational(rng));
        Polynomial p(cs);
        if (p.is_zero()) continue;
        auto roots = isolate_real_roots(p);
        SturmSequence sturm(p);
        CHECK(static_cast<int>(roots.size()) == sturm.count_all());
        for (size_t i = 0; i < roots.size(); ++i) {
            for (size_t j = i + 1; j < roots.size(); ++j) {
                bool disjoint = roots[i].hi < roots[j].lo || roots[j].hi < roots[i].lo;
                CHECK(disjoint);
            }
            // bisection preserves the one-root certificate
            if (roots[i].lo < roots[i].hi) {
                Polynomial sf = squarefree_part(p);
                AlgebraicNumber a(sf, roots[i].lo, roots[i].hi);
                a.refine();
                a.refine();
                CHECK(a.lo() >= roots[i].lo);
                CHECK(a.hi() <= roots[i].hi);
            }
        }
    }
}

TEST_CASE("largest_real_root examples") {
    AlgebraicNumber two = largest_real_root(Polynomial({2, 1, -3, -1, 1}));
    CHECK(two.is_rational());
    CHECK(two.lo() == 2);

    AlgebraicNumber d = largest_real_root(Polynomial({-4, 1}));  // x - 4
    CHECK(d.is_rational());
    CHECK(d.lo() == 4);

    // d=3 with two singular orbits of length 2: lambda = 1 + sqrt(2)
    AlgebraicNumber lam = largest_real_root(Polynomial({-1, -1, 4, 0, -3, 1}));
    auto base = std::make_shared<AlgebraicNumber>(lam);
    NFElement x = NFElement::generator(base);
    CHECK((x * x - make_rational(2) * x - NFElement(make_rational(1))).sign() == 0);
    CHECK(lam.compare(make_rational(24, 10)) > 0);
    CHECK(lam.compare(make_rational(25, 10)) < 0);
}

TEST_CASE("largest_real_root certified precision") {
    Polynomial chi({-2, -1, 6, 0, -4, 1});
    AlgebraicNumber lam = largest_real_root(chi);
    mpz_class w50;
    mpz_ui_pow_ui(w50.get_mpz_t(), 10, 50);
    lam.refine_to_width(Rational(mpz_class(1), w50));
    mpz_class e40;
    mpz_ui_pow_ui(e40.get_mpz_t(), 10, 40);
    CHECK(abs(chi.eval(lam.midpoint())) < Rational(mpz_class(1), e40));
}

TEST_CASE("root_multiplicity examples") {
    AlgebraicNumber two(make_rational(2));
    CHECK(root_multiplicity(Polynomial({2, 1, -3, -1, 1}), two) == 1);
    AlgebraicNumber one(make_rational(1));
    CHECK(root_multiplicity(Polynomial({1, -2, 1}), one) == 2);
    Polynomial chi({-2, -1, 6, 0, -4, 1});
    AlgebraicNumber lam = largest_real_root(chi);
    CHECK(root_multiplicity(chi, lam) == 1);
    CHECK(root_multiplicity(Polynomial({1, -2, 1}), two) == 0);
}

TEST_CASE("nf arithmetic on Q(lambda), lambda = (3+sqrt(17))/2") {
    Polynomial chi({-2, -1, 6, 0, -4, 1});
    auto base = std::make_shared<AlgebraicNumber>(largest_real_root(chi));
    NFElement lam = NFElement::generator(base);
    NFElement one(make_rational(1));

    NFElement e = (lam - one) / (lam * lam - one);
    CHECK(e == one / (lam + one));
    CHECK(e.decimal(5).substr(0, 7) == "0.21922");

    CHECK(lam * one == lam);
    CHECK(lam + (NFElement(make_rational(4)) - lam) == NFElement(make_rational(4)));

    // lambda satisfies x^2 - 3x - 2 after any refinement the inverse needed
    CHECK((lam * lam - make_rational(3) * lam - make_rational(2) * one).sign() == 0);
}

TEST_CASE("nf_sign examples") {
    Polynomial chi({-2, -1, 6, 0, -4, 1});
    auto base = std::make_shared<AlgebraicNumber>(largest_real_root(chi));
    NFElement lam = NFElement::generator(base);
    NFElement one(make_rational(1));

    CHECK(nf_sign(lam - NFElement(make_rational(3))) == 1);
    CHECK(nf_sign(NFElement()) == 0);

    NFElement c2 = lam * (lam - one) / (lam * lam - one);  // c_{i,2} = (sqrt17-1)/4
    CHECK(nf_sign(one - make_rational(2) * c2) == -1);
    CHECK((one - make_rational(2) * c2).decimal(4) == "-0.5616");  // -0.56155... rounded
}

TEST_CASE("nf field axioms on random triples") {
    Polynomial chi({-2, -1, 6, 0, -4, 1});
    auto base = std::make_shared<AlgebraicNumber>(largest_real_root(chi));
    std::mt19937 rng(3);
    auto rand_elem = [&] {
        std::vector<Rational> cs;
        for (int i = 0; i < 3; ++i) cs.push_back(rand_rational(rng));
        return NFElement(base, Polynomial(cs));
    };
    for (int trial = 0; trial < 200; ++trial) {
        NFElement a = rand_elem(), b = rand_elem(), c = rand_elem();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (a.sign() != 0) CHECK(a * a.inverse() == NFElement(make_rational(1)));
    }
}

TEST_CASE("nf_sign agrees with high-precision numerics") {
    Polynomial chi({-2, -1, 6, 0, -4, 1});
    auto base = std::make_shared<AlgebraicNumber>(largest_real_root(chi));
    base->refine_to_width(Rational(mpz_class(1), mpz_class(1) << 200));
    Rational mid = base->midpoint();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> cs;
        for (int i = 0; i < 4; ++i) cs.push_back(rand_rational(rng));
        Polynomial r(cs);
        NFElement e(base, r);
        int s = nf_sign(e);
        Rational approx = (e.repr() % base->modulus()).eval(mid);
        if (s == 0) {
            CHECK(abs(approx) < Rational(mpz_class(1), mpz_class(1) << 100));
        } else {
            CHECK(sgn(approx) == s);
        }
    }
}

TEST_CASE("division by an element vanishing at lambda fails") {
    // modulus (x-1)(x-2), generator isolated at 2; x-2 vanishes there
    Polynomial m = Polynomial::linear_root(make_rational(1)) *
                   Polynomial::linear_root(make_rational(2));
    auto base = std::make_shared<AlgebraicNumber>(m, make_rational(3, 2), make_rational(3));
    NFElement x = NFElement::generator(base);
    NFElement vanishing = x - NFElement(make_rational(2));
    CHECK_THROWS_AS(vanishing.inverse(), std::domain_error);
    // x - 1 is a zero divisor mod (x-1)(x-2) but invertible at lambda = 2
    auto base2 = std::make_shared<AlgebraicNumber>(m, make_rational(3, 2), make_rational(3));
    NFElement y = NFElement::generator(base2);
    NFElement inv = (y - NFElement(make_rational(1))).inverse();
    CHECK(inv == NFElement(make_rational(1)));  // 1/(2-1)
}
