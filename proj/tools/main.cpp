// Command-line front end: exact cohomological analysis of the maps f = L o J
// on P^d, plus the fixtures, the parameter-grid verifier and the numeric
// studies. Exit codes: 0 success, 1 usage error, 2 unsupported configuration,
// 3 internal contradiction.
#include <CLI11.hpp>

#include "noedyn/grid.hpp"
#include "noedyn/report.hpp"

#include <iostream>
#include <sstream>

using namespace noedyn;

namespace {

NoetherianMap parse_map(const std::string& a_csv) {
    std::vector<Rational> a;
    std::stringstream ss(a_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) a.push_back(parse_rational(tok));
    const int d = static_cast<int>(a.size()) - 1;  // before the move
    return NoetherianMap(d, std::move(a));
}

struct GlobalOpts {
    std::string a_csv;
    bool json = false;
    int precision = 30;
    unsigned seed = 0;
    int horizon = 50;
};

int cmd_analyze(const GlobalOpts& g, bool asymptotics, int cesaro_N, bool sampling,
                int samples, int n_max) {
    NoetherianMap f = parse_map(g.a_csv);
    AnalysisOptions opt;
    opt.horizon = g.horizon;
    opt.precision = g.precision;
    opt.seed = g.seed;
    opt.run_asymptotics = asymptotics;
    opt.cesaro_N_max = cesaro_N;
    opt.run_sampling = sampling;
    opt.sampling_samples = samples;
    opt.sampling_n_max = n_max;
    AnalysisReport r = run_analysis(f, opt);
    if (g.json)
        std::cout << to_json(r, g.precision).dump(2) << "\n";
    else
        std::cout << to_text(r, std::min(g.precision, 15));
    return 0;
}

int cmd_orbits(const GlobalOpts& g) {
    NoetherianMap f = parse_map(g.a_csv);
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int i = 0; i <= f.d(); ++i) {
        OrbitRecord rec = orbit(f, i, g.horizon);
        if (g.json) {
            nlohmann::ordered_json pts = nlohmann::ordered_json::array();
            for (const auto& p : rec.points) pts.push_back(p.str());
            out.push_back({{"i", i},
                           {"singular", rec.singular},
                           {"length", rec.length},
                           {"points", std::move(pts)}});
        } else {
            std::cout << "orbit of p_" << i << ": "
                      << (rec.singular ? "singular, N = " + std::to_string(rec.length)
                                       : "no return within horizon " +
                                             std::to_string(g.horizon))
                      << "\n";
            for (size_t j = 0; j < rec.points.size(); ++j)
                std::cout << "  p_{" << i << "," << j + 1 << "} = " << rec.points[j].str()
                          << "\n";
        }
    }
    if (g.json) std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_star(const GlobalOpts& g) {
    NoetherianMap f = parse_map(g.a_csv);
    AnalysisReport r = run_analysis(f, {.horizon = g.horizon});
    if (r.degenerate) {
        std::cout << "lambda <= 1: dynamically degenerate\n";
        return 0;
    }
    const StarGate& s = *r.star;
    if (g.json) {
        std::cout << nlohmann::ordered_json{{"holds", s.holds},
                                            {"reason", s.reason},
                                            {"a_nonzero_on_S", s.a_nonzero_on_S},
                                            {"lambda_ge_d_minus_1", s.lambda_ge_d_minus_1}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "L^1 convergence gate: " << (s.holds ? "holds" : "fails") << "\n  "
                  << s.reason << "\n";
    }
    return 0;
}

int cmd_cesaro(const GlobalOpts& g, int N_max) {
    NoetherianMap f = parse_map(g.a_csv);
    AnalysisOptions opt{.horizon = g.horizon, .run_asymptotics = true, .cesaro_N_max = N_max};
    AnalysisReport r = run_analysis(f, opt);
    if (r.degenerate) throw UnsupportedConfiguration("cesaro: lambda > 1 required");
    if (g.json) {
        std::cout << nlohmann::ordered_json{
                         {"jordan_index", *r.jordan_m},
                         {"N", r.cesaro_run->N_values},
                         {"errors", r.cesaro_run->errors},
                         {"fitted_decay_exponent", r.cesaro_run->fitted_decay_exponent}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "jordan index m = " << *r.jordan_m << "\n";
        for (size_t t = 0; t < r.cesaro_run->N_values.size(); ++t)
            std::cout << "  N = " << r.cesaro_run->N_values[t]
                      << "  error = " << r.cesaro_run->errors[t] << "\n";
        std::cout << "fitted decay exponent: " << r.cesaro_run->fitted_decay_exponent << "\n";
    }
    return 0;
}

int cmd_grid(const GlobalOpts& g, int d_max, int n_max) {
    GridEnumeration en = enumerate_grid(d_max, n_max);
    int fails = 0;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& cfg : en.configs) {
        GridCheck c = verify_configuration(cfg);
        if (!c.ok()) ++fails;
        std::ostringstream ncsv;
        for (size_t t = 0; t < cfg.N.size(); ++t) ncsv << (t ? "," : "") << cfg.N[t];
        if (g.json) {
            rows.push_back({{"d", cfg.d},
                            {"l", cfg.l},
                            {"N", cfg.N},
                            {"charpoly_ok", c.charpoly_ok},
                            {"lemma_ok", c.lemma_ok},
                            {"nef_ok", c.nef_ok},
                            {"orbits_ok", c.orbits_ok},
                            {"detail", c.detail}});
        } else {
            std::cout << (c.ok() ? "pass" : "FAIL") << "  d=" << cfg.d << " N=(" << ncsv.str()
                      << ")";
            if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
    }
    if (g.json) {
        std::cout << nlohmann::ordered_json{{"configurations", std::move(rows)},
                                            {"skipped_small_dl", en.skipped_small_dl},
                                            {"skipped_unfillable", en.skipped_unfillable},
                                            {"failures", fails}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << en.configs.size() << " configurations, " << fails << " failures ("
                  << en.skipped_small_dl << " skipped with d-l < 3, " << en.skipped_unfillable
                  << " unfillable)\n";
    }
    return fails == 0 ? 0 : 3;
}

int cmd_fixtures(const GlobalOpts& g, const std::string& which, int lambda) {
    nlohmann::ordered_json j;
    if (which == "p3cubic") {
        P3CubicFixture fx = fixture_p3_cubic();
        j["basis"] = fx.model.basis();
        j["charpoly"] = fx.charpoly.str();
        nlohmann::ordered_json sig = nlohmann::ordered_json::object();
        for (const auto& [k, v] : fx.sigma_table) sig[k] = to_string(v);
        j["sigma_intersections"] = std::move(sig);
        j["pullback_alpha_dot_sigma"] = to_string(fx.pullback_dot_sigma);
        j["pullback_leaves_psef"] = fx.pullback_leaves_psef;
    } else if (which == "blowup-invariant") {
        DiagonalFixture fx = fixture_diagonal_blowup(lambda);
        j["basis"] = fx.model.basis();
        j["E_self_intersection"] = to_string(fx.self_intersection_E);
        j["E_psef"] = fx.E_psef;
        j["E_nef"] = fx.E_nef;
    } else if (which == "y-model") {
        NoetherianMap f = parse_map(g.a_csv);
        auto [model, M] = build_Y_model(f);
        j["basis"] = model.basis();
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (Eigen::Index r = 0; r < M.rows(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(to_string(M(r, c)));
            rows.push_back(std::move(row));
        }
        j["pullback_matrix"] = std::move(rows);
        j["charpoly"] = char_poly(M).str();
    } else {
        throw CLI::ValidationError("fixtures", "unknown fixture '" + which + "'");
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomological dynamics of the maps f = L o J on P^d"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit JSON instead of text");
    app.add_option("--precision", g.precision, "decimal digits for approximations")
        ->default_val(30);
    app.add_option("--seed", g.seed, "seed for the Monte Carlo studies")->default_val(0);
    app.add_option("--horizon", g.horizon, "orbit iteration bound")->default_val(50);

    const std::string a_help = "comma-separated rationals a_0,..,a_d (sum 2, d >= 3)";

    auto* analyze = app.add_subcommand("analyze", "full pipeline for one map");
    analyze->fallthrough();
    analyze->add_option("--a", g.a_csv, a_help)->required();
    bool asymptotics = false, sampling = false;
    int cesaro_N = 1000, samples = 20000, n_max = 8;
    analyze->add_flag("--asymptotics", asymptotics, "include jordan index and cesaro means");
    analyze->add_option("--cesaro-n", cesaro_N, "largest cesaro N")->default_val(1000);
    analyze->add_flag("--sampling", sampling, "include the Monte Carlo L^1 trend");
    analyze->add_option("--samples", samples, "Monte Carlo sample count")->default_val(20000);
    analyze->add_option("--n-max", n_max, "largest iterate in the L^1 trend")->default_val(8);

    auto* orbits = app.add_subcommand("orbits", "exact singular orbits of one map");
    orbits->fallthrough();
    orbits->add_option("--a", g.a_csv, a_help)->required();

    auto* star = app.add_subcommand("star", "L^1 convergence gate for one map");
    star->fallthrough();
    star->add_option("--a", g.a_csv, a_help)->required();

    auto* ces = app.add_subcommand("cesaro", "cesaro means toward the invariant class");
    ces->fallthrough();
    ces->add_option("--a", g.a_csv, a_help)->required();
    int ces_N = 1000;
    ces->add_option("--N", ces_N, "largest N")->default_val(1000);

    auto* grid = app.add_subcommand("grid-verify",
                                    "verify the closed forms over a parameter grid");
    grid->fallthrough();
    int d_max = 6, grid_n_max = 4;
    grid->add_option("--d-max", d_max, "largest dimension")->default_val(6);
    grid->add_option("--n-max", grid_n_max, "largest orbit length")->default_val(4);

    auto* fixtures = app.add_subcommand("fixtures", "cohomology-level fixtures");
    fixtures->fallthrough();
    std::string which;
    int fx_lambda = 2;
    fixtures->add_option("name", which, "p3cubic | blowup-invariant | y-model")->required();
    fixtures->add_option("--a", g.a_csv, a_help + " (y-model only)");
    fixtures->add_option("--lambda", fx_lambda, "diagonal entry (blowup-invariant only)")
        ->default_val(2);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(g, asymptotics, cesaro_N, sampling, samples, n_max);
        if (*orbits) return cmd_orbits(g);
        if (*star) return cmd_star(g);
        if (*ces) return cmd_cesaro(g, ces_N);
        if (*grid) return cmd_grid(g, d_max, grid_n_max);
        if (*fixtures) return cmd_fixtures(g, which, fx_lambda);
    } catch (const UnsupportedConfiguration& e) {
        std::cerr << "unsupported configuration: " << e.what() << "\n";
        return 2;
    } catch (const InternalContradiction& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
