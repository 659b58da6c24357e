// Acceptance checks: one pass/fail line per criterion, nonzero exit when any
// criterion fails or overruns its time budget.
#include "noedyn/grid.hpp"
#include "noedyn/report.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

using namespace noedyn;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) why << "; ";
            why << what;
            ok = false;
        }
    }
};

struct Harness {
    int failures = 0;
    int index = 0;

    template <typename Body>
    void criterion(const std::string& name, double budget_s, Body body) {
        ++index;
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.require(dt <= budget_s,
                  "overran the " + std::to_string(budget_s) + "s budget");
        if (!c.ok) ++failures;
        std::printf("[%s] %02d %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", index, name.c_str(),
                    dt, c.ok ? "" : " -- ", c.ok ? "" : c.why.str().c_str());
        std::fflush(stdout);
    }
};

NoetherianMap worked_d4() {
    return NoetherianMap(4, {make_rational(1, 2), make_rational(1, 2), make_rational(1, 3),
                             make_rational(1, 5), make_rational(7, 15)});
}

Rational rand_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
    return make_rational(num(rng), den(rng));
}

}  // namespace

int main() {
    Harness h;

    h.criterion("cubic involution on P^3: pullback leaves the psef cone", 1.0, [](Check& c) {
        P3CubicFixture fx = fixture_p3_cubic();
        c.require(fx.charpoly == Polynomial({2, 1, -3, -1, 1}),
                  "characteristic polynomial is not x^4 - x^3 - 3x^2 + x + 2");
        c.require(char_poly(fx.matrix) == fx.charpoly, "matrix disagrees with its polynomial");
        SpectralData sd = dynamical_degree(fx.matrix);
        c.require(sd.lambda.compare(Rational(2)) == 0, "largest eigenvalue is not 2");
        c.require(fx.sigma_table.at("H") == 0 && fx.sigma_table.at("E0") == 0 &&
                      fx.sigma_table.at("E23") == -1 && fx.sigma_table.at("E13") == 0,
                  "intersection table of the generic exceptional line is wrong");
        // alpha = H - E0 - E23 pairs to 1 with sigma, but its pullback pairs
        // to -1, so the pullback cannot stay psef
        c.require(fx.pullback_dot_sigma == -1, "f*(alpha) . sigma != -1");
        c.require(fx.pullback_leaves_psef, "f*(alpha) was not flagged as leaving psef");
    });

    // one shared verification sweep serves the four grid criteria
    GridEnumeration grid = enumerate_grid(6, 4);
    std::vector<GridCheck> results;
    const auto grid_t0 = std::chrono::steady_clock::now();
    for (const auto& cfg : grid.configs) results.push_back(verify_configuration(cfg));
    const double grid_dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - grid_t0).count();

    auto grid_criterion = [&](const std::string& name, bool GridCheck::*flag) {
        h.criterion(name, 300.0, [&](Check& c) {
            c.require(grid.configs.size() >= 50,
                      "only " + std::to_string(grid.configs.size()) + " configurations");
            c.require(grid_dt <= 300.0, "grid sweep overran 300s");
            for (size_t t = 0; t < results.size(); ++t)
                if (!(results[t].*flag))
                    c.require(false, "d=" + std::to_string(grid.configs[t].d) + " config " +
                                         std::to_string(t) + ": " + results[t].detail);
        });
    };
    grid_criterion("closed-form characteristic polynomial over " +
                       std::to_string(grid.configs.size()) + " grid configurations",
                   &GridCheck::charpoly_ok);
    grid_criterion("invariant-class eigenvalue identities over the grid",
                   &GridCheck::lemma_ok);

    h.criterion("worked example on P^4: certified spectral data", 5.0, [](Check& c) {
        AnalysisReport r = run_analysis(worked_d4());
        c.require(r.charpoly_matches, "closed-form characteristic polynomial mismatch");
        c.require(r.spectral.unique_modulus_gt1, "uniqueness of the large eigenvalue failed");
        AlgebraicNumber lam = r.spectral.lambda;
        // lambda = (3 + sqrt 17)/2, the largest root of x^2 - 3x - 2
        c.require(lam.sign_of(Polynomial({-2, -3, 1})) == 0, "lambda is not (3 + sqrt17)/2");
        c.require(lam.decimal(4) == "3.5616", "lambda decimal is not 3.5616");
        c.require(r.lambda_bounds_ok, "lambda left [d-l-1, d]");
        const InvariantClass& inv = *r.invariant;
        c.require(inv.ok(), "invariant-class identities failed");
        c.require(inv.c.at({0, 1}).decimal(5) == "0.21922", "c_{0,1} is not 0.21922...");
        c.require(inv.c.at({0, 2}).decimal(5) == "0.78078", "c_{0,2} is not 0.78077...");
        c.require(inv.c.at({0, 1}) == inv.c.at({1, 1}), "the two orbits are not symmetric");
        // sqrt 17 = 2 lambda - 3 exactly
        auto base = std::make_shared<AlgebraicNumber>(r.spectral.lambda);
        NFElement s17 = Rational(2) * NFElement::generator(base) - NFElement(Rational(3));
        c.require(s17 * s17 == NFElement(Rational(17)) && nf_sign(s17) == 1,
                  "2 lambda - 3 is not sqrt 17");
        c.require(!r.nef->nef && r.nef->certificate_value.decimal(4) == "-0.5616",
                  "certificate value is not 3 - lambda = -0.5616");
        c.require(r.star->holds, "the L^1 convergence gate should hold");
    });

    grid_criterion("nef dichotomy with negative-curve certificates over the grid",
                   &GridCheck::nef_ok);

    h.criterion("non-nef locus in both regimes, contained in the indeterminacy set", 10.0,
                [](Check& c) {
                    // regime 1: k <= d-2 (worked example, k = 1, d = 4)
                    AnalysisReport r = run_analysis(worked_d4());
                    c.require(r.locus && r.locus->case_tag == "k_le_d_minus_2",
                              "worked example not in the k <= d-2 regime");
                    c.require(r.locus->components.size() == 1 &&
                                  r.locus->components[0].I == std::vector<int>{2, 3, 4},
                              "locus is not Sigma_{2,3,4}");
                    c.require(nf_sign(r.locus->components[0].value) == -1,
                              "component certificate is not negative");
                    c.require(r.containment && r.containment->ok(),
                              "containment in the indeterminacy set failed");

                    // regime 2: k = d-1 (d = 5, five half orbits and one -1/2)
                    NoetherianMap g(5, {make_rational(1, 2), make_rational(1, 2),
                                        make_rational(1, 2), make_rational(1, 2),
                                        make_rational(1, 2), make_rational(-1, 2)});
                    AnalysisReport rg = run_analysis(g);
                    c.require(rg.spectral.lambda.compare(Rational(4)) == 0, "lambda != 4");
                    c.require(rg.locus && rg.locus->case_tag == "k_eq_d_minus_1",
                              "witness not in the k = d-1 regime");
                    c.require(rg.locus->cN_identity_ok, "c_N != (d-1)/d");
                    c.require(rg.locus->components.size() == 5, "expected five components");
                    for (const auto& comp : rg.locus->components) {
                        c.require(comp.I.size() == 2 && comp.I[1] == 5,
                                  "component is not Sigma_{i,5}");
                        c.require(comp.value == NFElement(make_rational(-3, 5)),
                                  "component value is not -3/5");
                    }
                    c.require(rg.containment && rg.containment->ok(),
                              "containment failed for the k = d-1 witness");
                });

    h.criterion("extended model on P^3: action kills F, invariant class extends", 5.0,
                [](Check& c) {
                    NoetherianMap f(3, {make_rational(1, 2), make_rational(1, 2),
                                        make_rational(2, 5), make_rational(3, 5)});
                    auto [mx, MX] = build_pullback(f);
                    auto [my, MY] = build_Y_model(f);
                    c.require(my.has_F(), "Y basis has no F class");
                    c.require(char_poly(MY) ==
                                  Polynomial::monomial(1) * char_poly(MX),
                              "characteristic polynomial is not x times the X one");
                    for (Eigen::Index r = 0; r < MY.rows(); ++r)
                        c.require(MY(r, my.f_slot()) == 0, "f*(F) != 0");
                    SpectralData sd = dynamical_degree(MY);
                    auto base = std::make_shared<AlgebraicNumber>(sd.lambda);
                    // lambda = 1 + sqrt 2 on this map
                    c.require(sd.lambda.sign_of(Polynomial({-1, -2, 1})) == 0,
                              "lambda is not 1 + sqrt 2");
                    InvariantClass inv = invariant_class(my, MY, base);
                    c.require(inv.ok(), "extended invariant-class identities failed");
                    NFElement lamel = NFElement::generator(base);
                    c.require(inv.alpha.coeffs(my.f_slot()) == -lamel.inverse(),
                              "F coefficient of alpha is not -1/lambda");

                    // three equal singular orbits need line blow-ups the model
                    // does not cover: must refuse, not mis-compute
                    NoetherianMap g(3, {make_rational(1, 2), make_rational(1, 2),
                                        make_rational(1, 3), make_rational(2, 3)});
                    bool refused = false;
                    try {
                        build_Y_model(g);
                    } catch (const UnsupportedConfiguration&) {
                        refused = true;
                    }
                    c.require(refused, "|S| = 3 was not refused");
                });

    grid_criterion("exact orbit iteration matches the closed form over the grid",
                   &GridCheck::orbits_ok);

    h.criterion("cesaro means reach the invariant direction by N = 1000", 30.0, [](Check& c) {
        NoetherianMap f = worked_d4();
        AnalysisOptions opt;
        opt.run_asymptotics = true;
        opt.cesaro_N_max = 1000;
        AnalysisReport r = run_analysis(f, opt);
        c.require(*r.jordan_m == 1, "jordan index is not 1");
        c.require(r.cesaro_run->N_values.back() == 1000, "schedule does not end at 1000");
        c.require(r.cesaro_run->errors.back() < 1e-3,
                  "error " + std::to_string(r.cesaro_run->errors.back()) + " >= 1e-3");
        const double s = r.cesaro_run->fitted_decay_exponent;
        c.require(-1.3 <= s && s <= -0.7,
                  "fitted decay exponent " + std::to_string(s) + " outside [-1.3, -0.7]");
    });

    h.criterion("squaring-map chart model: sublevel volume does not vanish (1e6 samples)",
                60.0, [](Check& c) {
                    SquaringChartReport rep = squaring_chart_study(20, 1000000, 0);
                    c.require(rep.identity_ok, "pointwise identity violated");
                    c.require(rep.containment_ok, "sublevel containment violated");
                    c.require(rep.volume_nonvanishing,
                              "a sublevel volume fell below the certified floor");
                });

    h.criterion("L^1 trend of the normalized potential is monotone (1e5 samples)", 120.0,
                [](Check& c) {
                    NoetherianMap f = worked_d4();
                    AnalysisReport base = run_analysis(f);
                    DivisorPotential u = build_potential(f, *base.invariant);
                    AlgebraicNumber lam = base.spectral.lambda;
                    SamplingReport rep = l1_trend(f, u, lam.to_double(), 12, 100000, 0);
                    c.require(rep.reliable, "more than 1% of the samples were dropped");
                    for (size_t n = 1; n < rep.estimates.size(); ++n)
                        c.require(rep.estimates[n] < rep.estimates[n - 1],
                                  "estimate rose from n = " + std::to_string(n) + " to " +
                                      std::to_string(n + 1));
                });

    h.criterion("field axioms and exact signs on random elements of Q(lambda)", 60.0,
                [](Check& c) {
                    Polynomial chi({-2, -1, 6, 0, -4, 1});  // worked-example polynomial
                    auto base = std::make_shared<AlgebraicNumber>(largest_real_root(chi));
                    std::mt19937 rng(3);
                    auto rand_elem = [&](int deg) {
                        std::vector<Rational> cs;
                        for (int i = 0; i < deg; ++i) cs.push_back(rand_rational(rng));
                        return NFElement(base, Polynomial(cs));
                    };
                    const NFElement one{Rational(1)};
                    for (int trial = 0; trial < 1000; ++trial) {
                        NFElement a = rand_elem(3), b = rand_elem(3), e = rand_elem(3);
                        c.require((a + b) + e == a + (b + e), "associativity of + failed");
                        c.require((a * b) * e == a * (b * e), "associativity of * failed");
                        c.require(a * (b + e) == a * b + a * e, "distributivity failed");
                        if (a.sign() != 0)
                            c.require(a * a.inverse() == one, "multiplicative inverse failed");
                        if (!c.ok) return;
                    }
                    base->refine_to_width(Rational(mpz_class(1), mpz_class(1) << 200));
                    Rational mid = base->midpoint();
                    for (int trial = 0; trial < 1000; ++trial) {
                        NFElement e = rand_elem(4);
                        int s = nf_sign(e);
                        Rational approx = (e.repr() % base->modulus()).eval(mid);
                        bool agree = s == 0
                                         ? abs(approx) < Rational(mpz_class(1),
                                                                  mpz_class(1) << 100)
                                         : sgn(approx) == s;
                        c.require(agree, "exact sign disagrees with 200-bit numerics");
                        if (!c.ok) return;
                    }
                });

    std::printf("%d of %d criteria passed\n", h.index - h.failures, h.index);
    return h.failures == 0 ? 0 : 1;
}
