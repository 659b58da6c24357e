#pragma once

#include "noedyn/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace noedyn {

struct NefVerdict {
    bool nef;
    std::optional<CurveDatum> certificate;  // an alpha-negative curve when not nef
    NFElement certificate_value;            // exact intersection, sign -1
    bool supporting_inequality_ok;          // c_{i,N_i} > 1 - 1/lambda for the witnesses
};

/// alpha_f is nef iff |S| <= 1. A not-nef verdict always carries a concrete
/// certificate: the line through e_{i1}, e_{i2} with intersection value
/// 1 - c_{i1,N_{i1}} - c_{i2,N_{i2}}, sign-verified negative. A failed sign
/// check throws InternalContradiction (it would falsify the classification).
NefVerdict nef_decide(const NoetherianMap& f, const InvariantClass& inv,
                      const AlgebraicNumberPtr& lambda);

struct NonNefComponent {
    std::vector<int> I;      // the coordinate subspace Sigma_I = {x_i = 0, i in I}
    CurveDatum certificate;  // alpha-negative curve inside the component
    NFElement value;         // exact intersection, sign -1
};

struct NonNefLocus {
    std::vector<NonNefComponent> components;
    std::string case_tag;  // "k_le_d_minus_2" | "k_eq_d_minus_1"
    bool cN_identity_ok;    // k = d-1 only: c_N = (d-1)/d exactly (else true)
};

/// The non-nef locus of alpha_f for 1 <= k <= d-1 with equal orbit lengths
/// N >= 2: a single component Sigma_{complement(S)} when k <= d-2, the union
/// of Sigma_{{i,t}} over i in S (t the non-singular index) when k = d-1.
/// Throws UnsupportedConfiguration outside those hypotheses.
NonNefLocus nonnef_locus(const NoetherianMap& f, const InvariantClass& inv,
                         const AlgebraicNumberPtr& lambda);

struct ContainmentReport {
    bool descriptors_codim_ge_2;   // every |I| >= 2
    int sampled;                   // rational points tested per component
    bool samples_indeterminate;    // all sampled points lie in I_f
    bool ok() const { return descriptors_codim_ge_2 && samples_indeterminate; }
};

/// Checks E_nn(alpha_f) subset I_f at the P^d level: each descriptor has
/// |I| >= 2 and sampled rational points of each component are indeterminate.
ContainmentReport check_Enn_in_indeterminacy(const NonNefLocus& locus, int d,
                                             int samples_per_component = 100,
                                             unsigned seed = 20240901);

struct StarGate {
    bool holds;
    std::string reason;        // justification or the failing condition
    bool a_nonzero_on_S;       // every a_i != 0 for i in S
    bool lambda_ge_d_minus_1;  // the proof's bound 1 - (d - lambda) >= 0
};

/// Sufficient conditions for the L^1 convergence (1/lambda^n)
/// v_alpha^min o f^n -> 0: a_i != 0 on S and lambda >= d - 1 (equivalently
/// sum_i c_{i,1} <= 1, cross-checked exactly). |S| = 0 holds trivially via
/// nefness of alpha = H.
StarGate star_gate(const NoetherianMap& f, SpectralData& sd, const InvariantClass& inv);

}  // namespace noedyn
