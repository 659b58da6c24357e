#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "noedyn/potentials.hpp"

#include <cmath>

using namespace noedyn;

namespace {

NoetherianMap worked_d4() {
    return NoetherianMap(4, {make_rational(1, 2), make_rational(1, 2), make_rational(1, 3),
                             make_rational(1, 5), make_rational(7, 15)});
}

struct Analyzed {
    BlowupModel model;
    QMatrix M;
    SpectralData sd;
    AlgebraicNumberPtr base;
    InvariantClass inv;
};

Analyzed analyze(const NoetherianMap& f) {
    auto [model, M] = build_pullback(f);
    SpectralData sd = dynamical_degree(M);
    auto base = std::make_shared<AlgebraicNumber>(sd.lambda);
    InvariantClass inv = invariant_class(model, M, base);
    return Analyzed{std::move(model), std::move(M), std::move(sd), base, std::move(inv)};
}

}  // namespace

TEST_CASE("potential of the worked d=4 example: two levels, weights c_1, c_2") {
    NoetherianMap f = worked_d4();
    Analyzed an = analyze(f);
    DivisorPotential u = build_potential(f, an.inv);
    REQUIRE(u.terms.size() == 2);
    CHECK(u.terms[0].weight == doctest::Approx(0.21922).epsilon(1e-4));
    CHECK(u.terms[1].weight == doctest::Approx(0.78078).epsilon(1e-4));
    // each level-l hyperplane passes through every p_{i,l}, i in S
    for (int l = 1; l <= 2; ++l) {
        const auto& form = u.terms[static_cast<size_t>(l - 1)].form;
        for (int i : {0, 1}) {
            ProjPoint p = orbit_point_closed_form(f, i, l);
            double dot = 0;
            for (int c = 0; c <= 4; ++c) dot += form[static_cast<size_t>(c)] * p[c].get_d();
            CHECK(std::abs(dot) < 1e-12);
        }
    }
}

TEST_CASE("potential weights of a single orbit sum to 1") {
    NoetherianMap f(3, {make_rational(1, 2), make_rational(1, 4), make_rational(1, 4),
                        Rational(1)});
    Analyzed an = analyze(f);
    DivisorPotential u = build_potential(f, an.inv);
    REQUIRE(u.terms.size() == 2);
    double total = 0;
    for (const auto& t : u.terms) {
        CHECK(t.weight > 0);
        total += t.weight;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("potential construction guards") {
    NoetherianMap none(3, {make_rational(1, 3), make_rational(1, 5), make_rational(2, 5),
                           make_rational(16, 15)});
    Analyzed an = analyze(none);
    CHECK_THROWS_AS(build_potential(none, an.inv), UnsupportedConfiguration);

    NoetherianMap mixed(3, {make_rational(1, 2), make_rational(2, 3), make_rational(1, 5),
                            make_rational(19, 30)});
    Analyzed am = analyze(mixed);
    CHECK_THROWS_AS(build_potential(mixed, am.inv), UnsupportedConfiguration);
}

TEST_CASE("L^1 trend on the worked d=4 example decreases") {
    NoetherianMap f = worked_d4();
    Analyzed an = analyze(f);
    DivisorPotential u = build_potential(f, an.inv);
    double lam = an.sd.lambda.to_double();
    SamplingReport rep = l1_trend(f, u, lam, 12, 20000, 42);
    CHECK(rep.reliable);
    for (size_t n = 1; n < rep.estimates.size(); ++n)
        CHECK(rep.estimates[n] < rep.estimates[n - 1]);
}

TEST_CASE("L^1 trend is deterministic for a fixed seed") {
    NoetherianMap f = worked_d4();
    Analyzed an = analyze(f);
    DivisorPotential u = build_potential(f, an.inv);
    double lam = an.sd.lambda.to_double();
    SamplingReport a = l1_trend(f, u, lam, 5, 3000, 11);
    SamplingReport b = l1_trend(f, u, lam, 5, 3000, 11);
    CHECK(a.estimates == b.estimates);
    CHECK(a.dropped == b.dropped);
}

TEST_CASE("L^1 trend: empty potential gives zero, doubling lambda rescales") {
    NoetherianMap f = worked_d4();
    Analyzed an = analyze(f);
    DivisorPotential zero;  // u == 0
    double lam = an.sd.lambda.to_double();
    SamplingReport rz = l1_trend(f, zero, lam, 6, 500, 3);
    for (double e : rz.estimates) CHECK(e == 0.0);

    DivisorPotential u = build_potential(f, an.inv);
    SamplingReport r1 = l1_trend(f, u, lam, 6, 2000, 5);
    SamplingReport r2 = l1_trend(f, u, 2 * lam, 6, 2000, 5);
    for (size_t n = 0; n < r1.estimates.size(); ++n)
        CHECK(r2.estimates[n] ==
              doctest::Approx(r1.estimates[n] * std::pow(0.5, static_cast<double>(n + 1))));
}

TEST_CASE("squaring-map chart model: identity, containment, volume floor") {
    SquaringChartReport rep = squaring_chart_study(20, 100000, 2024);
    CHECK(rep.identity_ok);
    CHECK(rep.max_identity_residual <= 1e-12);
    CHECK(rep.containment_ok);
    CHECK(rep.volume_nonvanishing);
    REQUIRE(rep.volumes.size() == 20);
    // the value is independent of n, so the sublevel volume cannot decay
    CHECK(rep.volumes[4] == doctest::Approx(rep.volumes[19]));
    // empirical volume tracks P(|s| < 1/e) = e^-2
    CHECK(rep.volumes[0] == doctest::Approx(std::exp(-2.0)).epsilon(0.05));
}

TEST_CASE("telescoping self-test") {
    NoetherianMap f = worked_d4();
    Analyzed an = analyze(f);
    DivisorPotential u = build_potential(f, an.inv);
    double lam = an.sd.lambda.to_double();
    CHECK(telescoping_selftest(f, u, lam, 1, 200) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(telescoping_selftest(f, u, lam, 10, 1000) < 1e-9);
    DivisorPotential zero;
    CHECK(telescoping_selftest(f, zero, lam, 5, 100) == 0.0);
}
