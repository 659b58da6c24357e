#pragma once

#include "noedyn/asymptotics.hpp"
#include "noedyn/positivity.hpp"
#include "noedyn/potentials.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace noedyn {

struct AnalysisOptions {
    int horizon = 50;         // orbit iteration bound for regularity checks
    int precision = 30;       // decimal digits for approximations in the report
    bool run_asymptotics = false;
    int cesaro_N_max = 1000;
    bool run_sampling = false;
    int sampling_n_max = 8;
    int sampling_samples = 20000;
    unsigned seed = 0;
};

/// Every pipeline stage in one record. Stages whose hypotheses fail are
/// absent, with the refusal message kept alongside; hard errors
/// (InternalContradiction) still propagate as exceptions.
struct AnalysisReport {
    NoetherianMap f;
    Classification classification;
    RegularityReport regularity;

    BlowupModel model;
    QMatrix M;
    std::optional<Polynomial> closed_charpoly;  // absent when S is empty
    bool charpoly_matches = true;

    SpectralData spectral;
    bool lambda_bounds_ok = true;
    bool degenerate = false;  // lambda <= 1: the stages below are skipped

    std::optional<InvariantClass> invariant;
    std::optional<NefVerdict> nef;
    std::optional<NonNefLocus> locus;
    std::string locus_note;  // refusal message when absent
    std::optional<ContainmentReport> containment;
    std::optional<StarGate> star;

    std::optional<int> jordan_m;
    std::optional<CesaroRun> cesaro_run;
    std::optional<SamplingReport> sampling;
    std::string sampling_note;

    double elapsed_seconds = 0;
};

/// Runs classification, regularity checks, the pullback model, the certified
/// dynamical degree, the invariant class, nef/non-nef classification and the
/// convergence gate, plus the optional numeric studies.
AnalysisReport run_analysis(const NoetherianMap& f, const AnalysisOptions& opt = {});

/// Serialization: exact values appear as strings (rationals "p/q",
/// polynomials in x, field elements as polynomials in lambda) next to decimal
/// approximations at the requested precision. Dumping, parsing and dumping
/// again is byte-identical.
nlohmann::ordered_json to_json(const AnalysisReport& r, int precision = 30);

/// Human-readable rendering of the same record.
std::string to_text(const AnalysisReport& r, int precision = 6);

}  // namespace noedyn
