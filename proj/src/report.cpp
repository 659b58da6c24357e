#include "noedyn/report.hpp"

#include <chrono>
#include <sstream>

namespace noedyn {

namespace {

using nlohmann::ordered_json;

ordered_json rational_entry(const Rational& r, int digits) {
    return ordered_json{{"exact", to_string(r)}, {"decimal", to_decimal(r, digits)}};
}

ordered_json nf_entry(const NFElement& e, int digits) {
    return ordered_json{{"exact", e.str()}, {"decimal", e.decimal(digits)}};
}

ordered_json matrix_rows(const QMatrix& M) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(to_string(M(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json curve_entry(const CurveDatum& C, const NFElement& value, int digits) {
    ordered_json mults = ordered_json::object();
    for (const auto& [ij, m] : C.mults)
        mults[std::to_string(ij.first) + "," + std::to_string(ij.second)] = m;
    return ordered_json{{"label", C.label},
                        {"degree", C.degree},
                        {"multiplicities", std::move(mults)},
                        {"intersection", nf_entry(value, digits)}};
}

std::vector<double> unit_direction(const InvariantClass& inv) {
    std::vector<double> v;
    double norm2 = 0;
    for (Eigen::Index i = 0; i < inv.alpha.coeffs.size(); ++i) {
        v.push_back(inv.alpha.coeffs(i).to_double());
        norm2 += v.back() * v.back();
    }
    const double n = std::sqrt(norm2);
    for (auto& x : v) x /= n;
    return v;
}

}  // namespace

AnalysisReport run_analysis(const NoetherianMap& f, const AnalysisOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();

    Classification cl = classify(f);
    RegularityReport reg = regularity_report(f, opt.horizon);
    auto [model, M] = build_pullback(f);
    SpectralData sd = dynamical_degree(M);

    AnalysisReport r{f, std::move(cl), std::move(reg), std::move(model), std::move(M),
                     std::nullopt, true, std::move(sd)};

    if (!r.classification.S.empty()) {
        r.closed_charpoly = closed_form_charpoly(f.d(), r.classification.l, r.classification.N);
        r.charpoly_matches = (*r.closed_charpoly == r.spectral.charpoly);
    }
    r.lambda_bounds_ok = lambda_within_bounds(r.spectral, f.d(), r.classification.l);
    r.degenerate = !r.spectral.gt_one;
    if (r.degenerate) {
        r.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }

    auto base = std::make_shared<AlgebraicNumber>(r.spectral.lambda);
    r.invariant = invariant_class(r.model, r.M, base);
    r.nef = nef_decide(f, *r.invariant, base);
    try {
        r.locus = nonnef_locus(f, *r.invariant, base);
        r.containment = check_Enn_in_indeterminacy(*r.locus, f.d());
    } catch (const UnsupportedConfiguration& e) {
        r.locus_note = e.what();
    }
    r.star = star_gate(f, r.spectral, *r.invariant);

    if (opt.run_asymptotics) {
        r.jordan_m = jordan_index(r.M, base);
        QVector beta = QVector::Constant(r.model.dim(), Rational(0));
        beta(0) = 1;  // start the averages at H
        AlgebraicNumber lam = r.spectral.lambda;
        r.cesaro_run =
            cesaro(r.M, beta, opt.cesaro_N_max, lam, *r.jordan_m, unit_direction(*r.invariant));
    }

    if (opt.run_sampling) {
        try {
            DivisorPotential u = build_potential(f, *r.invariant);
            AlgebraicNumber lam = r.spectral.lambda;
            r.sampling = l1_trend(f, u, lam.to_double(), opt.sampling_n_max,
                                  opt.sampling_samples, opt.seed);
        } catch (const UnsupportedConfiguration& e) {
            r.sampling_note = e.what();
        }
    }

    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

nlohmann::ordered_json to_json(const AnalysisReport& r, int precision) {
    ordered_json j;

    ordered_json a = ordered_json::array();
    for (const auto& x : r.f.a()) a.push_back(to_string(x));
    j["input"] = {{"d", r.f.d()}, {"a", std::move(a)}};

    j["classification"] = {{"S", r.classification.S},
                           {"N", r.classification.N},
                           {"l", r.classification.l},
                           {"k", r.classification.k},
                           {"equal_lengths", r.classification.equal_lengths()}};

    j["regularity"] = {
        {"horizon", r.regularity.horizon},
        {"singular_orbits_end_at_unit", r.regularity.singular_orbits_end_at_unit},
        {"nonsingular_orbits_avoid_indeterminacy",
         r.regularity.nonsingular_orbits_avoid_indeterminacy},
        {"orbits_pairwise_disjoint", r.regularity.orbits_pairwise_disjoint},
        {"points_distinct_within_orbit", r.regularity.points_distinct_within_orbit},
        {"ok", r.regularity.ok()},
        {"violations", r.regularity.violations}};

    j["model"] = {{"basis", r.model.basis()}, {"pullback_matrix", matrix_rows(r.M)}};

    ordered_json chi{{"matrix", r.spectral.charpoly.str()}};
    if (r.closed_charpoly) {
        chi["closed_form"] = r.closed_charpoly->str();
        chi["match"] = r.charpoly_matches;
    }
    j["charpoly"] = std::move(chi);

    AlgebraicNumber lam = r.spectral.lambda;  // decimal() refines a copy
    j["spectral"] = {{"lambda",
                      {{"modulus", lam.modulus().str()},
                       {"interval", {to_string(lam.lo()), to_string(lam.hi())}},
                       {"decimal", lam.decimal(precision)}}},
                     {"gt_one", r.spectral.gt_one},
                     {"simple", r.spectral.simple},
                     {"exact_real_unique", r.spectral.exact_real_unique},
                     {"numeric_complex_ok", r.spectral.numeric_complex_ok},
                     {"unique_modulus_gt1", r.spectral.unique_modulus_gt1},
                     {"method", r.spectral.method},
                     {"bounds_ok", r.lambda_bounds_ok}};

    if (r.degenerate) {
        j["degenerate"] = "lambda <= 1: invariant class, positivity and gates skipped";
        j["timing_seconds"] = r.elapsed_seconds;
        return j;
    }

    if (r.invariant) {
        const InvariantClass& inv = *r.invariant;
        ordered_json alpha = ordered_json::object();
        for (Eigen::Index i = 0; i < inv.alpha.coeffs.size(); ++i)
            alpha[r.model.basis()[static_cast<size_t>(i)]] =
                nf_entry(inv.alpha.coeffs(i), precision);
        ordered_json c = ordered_json::object();
        for (const auto& [ij, v] : inv.c)
            c[std::to_string(ij.first) + "," + std::to_string(ij.second)] =
                nf_entry(v, precision);
        j["invariant_class"] = {{"alpha", std::move(alpha)},
                                {"c", std::move(c)},
                                {"matches_nullspace", inv.matches_nullspace},
                                {"sum_first_is_d_minus_lambda", inv.sum_first_is_d_minus_lambda},
                                {"unit_orbit_sums", inv.unit_orbit_sums},
                                {"first_coeffs_positive", inv.first_coeffs_positive},
                                {"ok", inv.ok()}};
    }

    if (r.nef) {
        ordered_json nj{{"nef", r.nef->nef}};
        if (r.nef->certificate) {
            nj["certificate"] =
                curve_entry(*r.nef->certificate, r.nef->certificate_value, precision);
            nj["supporting_inequality_ok"] = r.nef->supporting_inequality_ok;
        }
        j["nef"] = std::move(nj);
    }

    if (r.locus) {
        ordered_json comps = ordered_json::array();
        for (const auto& comp : r.locus->components)
            comps.push_back(ordered_json{
                {"I", comp.I}, {"curve", curve_entry(comp.certificate, comp.value, precision)}});
        ordered_json lj{{"case", r.locus->case_tag},
                        {"components", std::move(comps)},
                        {"cN_identity_ok", r.locus->cN_identity_ok}};
        if (r.containment)
            lj["containment_in_indeterminacy"] = {
                {"descriptors_codim_ge_2", r.containment->descriptors_codim_ge_2},
                {"sampled_per_component", r.containment->sampled},
                {"samples_indeterminate", r.containment->samples_indeterminate},
                {"ok", r.containment->ok()}};
        j["non_nef_locus"] = std::move(lj);
    } else {
        j["non_nef_locus"] = {{"unsupported", r.locus_note}};
    }

    if (r.star)
        j["convergence_gate"] = {{"holds", r.star->holds},
                                 {"reason", r.star->reason},
                                 {"a_nonzero_on_S", r.star->a_nonzero_on_S},
                                 {"lambda_ge_d_minus_1", r.star->lambda_ge_d_minus_1}};

    if (r.jordan_m) {
        ordered_json aj{{"jordan_index", *r.jordan_m}};
        if (r.cesaro_run) {
            aj["cesaro"] = {{"N", r.cesaro_run->N_values},
                            {"errors", r.cesaro_run->errors},
                            {"fitted_decay_exponent", r.cesaro_run->fitted_decay_exponent}};
        }
        j["asymptotics"] = std::move(aj);
    }

    if (r.sampling) {
        j["sampling"] = {{"n", r.sampling->n_values},
                         {"estimates", r.sampling->estimates},
                         {"samples", r.sampling->sample_count},
                         {"seed", r.sampling->seed},
                         {"dropped", r.sampling->dropped},
                         {"reliable", r.sampling->reliable}};
    } else if (!r.sampling_note.empty()) {
        j["sampling"] = {{"unsupported", r.sampling_note}};
    }

    j["timing_seconds"] = r.elapsed_seconds;
    return j;
}

std::string to_text(const AnalysisReport& r, int precision) {
    std::ostringstream os;
    os << "map on P^" << r.f.d() << " with a = (";
    for (size_t i = 0; i < r.f.a().size(); ++i)
        os << (i ? ", " : "") << to_string(r.f.a()[i]);
    os << ")\n";

    os << "singular orbits: ";
    if (r.classification.S.empty()) {
        os << "none\n";
    } else {
        for (size_t t = 0; t < r.classification.S.size(); ++t)
            os << (t ? ", " : "") << "i=" << r.classification.S[t]
               << " (N=" << r.classification.N[t] << ")";
        os << "   l=" << r.classification.l << " k=" << r.classification.k << "\n";
    }
    os << "regularity checks (horizon " << r.regularity.horizon << "): "
       << (r.regularity.ok() ? "ok" : "FAILED") << "\n";
    for (const auto& v : r.regularity.violations) os << "  violation: " << v << "\n";

    os << "model basis (" << r.model.dim() << "): ";
    for (size_t i = 0; i < r.model.basis().size(); ++i)
        os << (i ? ", " : "") << r.model.basis()[i];
    os << "\n";
    os << "char poly: " << r.spectral.charpoly.str();
    if (r.closed_charpoly)
        os << "   closed form " << (r.charpoly_matches ? "matches" : "MISMATCH");
    os << "\n";

    AlgebraicNumber lam = r.spectral.lambda;
    os << "lambda = " << lam.decimal(precision) << "  (root of " << lam.modulus().str()
       << ", interval (" << to_string(lam.lo()) << ", " << to_string(lam.hi()) << "))\n";
    os << "  certified unique eigenvalue of modulus > 1: "
       << (r.spectral.unique_modulus_gt1 ? "yes" : "no") << "  [" << r.spectral.method << "]\n";
    os << "  bounds d-l-1 <= lambda <= d: " << (r.lambda_bounds_ok ? "ok" : "FAILED") << "\n";

    if (r.degenerate) {
        os << "lambda <= 1: dynamically degenerate, remaining stages skipped\n";
        return os.str();
    }

    if (r.invariant) {
        os << "invariant class alpha = H";
        for (const auto& [ij, v] : r.invariant->c)
            os << " - " << v.decimal(precision) << " P" << ij.first << "," << ij.second;
        os << "\n  identities (eigenvector, sum c_{i,1} = d - lambda, orbit sums = 1, "
              "positivity): "
           << (r.invariant->ok() ? "ok" : "FAILED") << "\n";
    }
    if (r.nef) {
        os << "alpha is " << (r.nef->nef ? "nef" : "not nef");
        if (r.nef->certificate)
            os << "  (certificate " << r.nef->certificate->label
               << ": alpha . C = " << r.nef->certificate_value.decimal(precision) << ")";
        os << "\n";
    }
    if (r.locus) {
        os << "non-nef locus (" << r.locus->case_tag << "): ";
        for (size_t t = 0; t < r.locus->components.size(); ++t) {
            os << (t ? " u " : "") << "Sigma_{";
            for (size_t q = 0; q < r.locus->components[t].I.size(); ++q)
                os << (q ? "," : "") << r.locus->components[t].I[q];
            os << "}";
        }
        os << "\n";
    } else if (!r.locus_note.empty()) {
        os << "non-nef locus: not computed (" << r.locus_note << ")\n";
    }
    if (r.star)
        os << "L^1 convergence gate: " << (r.star->holds ? "holds" : "fails") << " ("
           << r.star->reason << ")\n";
    if (r.jordan_m) {
        os << "jordan index m = " << *r.jordan_m;
        if (r.cesaro_run)
            os << ", cesaro error " << r.cesaro_run->errors.back() << " at N "
               << r.cesaro_run->N_values.back() << " (fitted exponent "
               << r.cesaro_run->fitted_decay_exponent << ")";
        os << "\n";
    }
    if (r.sampling) {
        os << "L^1 trend (" << r.sampling->sample_count << " samples, seed " << r.sampling->seed
           << "): ";
        for (size_t t = 0; t < r.sampling->estimates.size(); ++t)
            os << (t ? ", " : "") << r.sampling->estimates[t];
        os << "\n";
    } else if (!r.sampling_note.empty()) {
        os << "L^1 trend: not computed (" << r.sampling_note << ")\n";
    }
    return os.str();
}

}  // namespace noedyn
