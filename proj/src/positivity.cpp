#include "noedyn/positivity.hpp"

#include <algorithm>
#include <random>

namespace noedyn {

namespace {

// common orbit length; throws unless all N_i agree and N >= 2
int common_length(const Classification& cl) {
    if (!cl.equal_lengths() || cl.N.front() < 2)
        throw UnsupportedConfiguration(
            "non-nef locus: equal singular-orbit lengths N >= 2 required");
    return cl.N.front();
}

NFElement certified_negative(const InvariantClass& inv, const CurveDatum& curve) {
    NFElement value = intersect(inv.alpha, curve);
    if (nf_sign(value) >= 0)
        throw InternalContradiction("positivity: certificate curve '" + curve.label +
                                    "' is not alpha-negative");
    return value;
}

}  // namespace

NefVerdict nef_decide(const NoetherianMap& f, const InvariantClass& inv,
                      const AlgebraicNumberPtr& lambda) {
    Classification cl = classify(f);
    if (cl.S.size() <= 1)
        return NefVerdict{true, std::nullopt, NFElement(), true};

    std::vector<int> S = cl.S;
    std::sort(S.begin(), S.end());
    const int i1 = S[0], i2 = S[1];
    auto length_of = [&](int i) {
        for (size_t t = 0; t < cl.S.size(); ++t)
            if (cl.S[t] == i) return cl.N[t];
        throw std::logic_error("nef_decide: index not in S");
    };
    const int n1 = length_of(i1), n2 = length_of(i2);

    CurveDatum line{1,
                    {{{i1, n1}, 1}, {{i2, n2}, 1}},
                    "line through e_" + std::to_string(i1) + ", e_" + std::to_string(i2)};
    NFElement value = certified_negative(inv, line);

    // c_{i,N_i} > 1 - 1/lambda for both witness orbits
    NFElement lam = NFElement::generator(lambda);
    NFElement bound = NFElement(Rational(1)) - NFElement(Rational(1)) / lam;
    bool supporting = nf_sign(inv.c.at({i1, n1}) - bound) > 0 &&
                      nf_sign(inv.c.at({i2, n2}) - bound) > 0;
    return NefVerdict{false, std::move(line), std::move(value), supporting};
}

NonNefLocus nonnef_locus(const NoetherianMap& f, const InvariantClass& inv,
                         const AlgebraicNumberPtr& lambda) {
    (void)lambda;
    Classification cl = classify(f);
    const int d = f.d(), k = cl.k;
    if (k < 1 || k > d - 1)
        throw UnsupportedConfiguration("non-nef locus: 1 <= k <= d-1 required (k = " +
                                       std::to_string(k) + ")");
    const int N = common_length(cl);
    std::vector<int> S = cl.S;
    std::sort(S.begin(), S.end());
    std::vector<int> complement;
    for (int i = 0; i <= d; ++i)
        if (std::find(S.begin(), S.end(), i) == S.end()) complement.push_back(i);

    NonNefLocus locus;
    if (k <= d - 2) {
        locus.case_tag = "k_le_d_minus_2";
        locus.cN_identity_ok = true;
        // degree-k curve through all e_i, i in S: alpha . gamma = k - (k+1) c_N
        CurveDatum gamma{k, {}, "degree-" + std::to_string(k) + " curve through the e_i, i in S"};
        for (int i : S) gamma.mults[{i, N}] = 1;
        NFElement value = certified_negative(inv, gamma);
        locus.components.push_back({complement, std::move(gamma), std::move(value)});
    } else {
        locus.case_tag = "k_eq_d_minus_1";
        const int t = complement.front();  // the unique non-singular index
        // c_N = (d-1)/d exactly
        locus.cN_identity_ok =
            inv.c.at({S.front(), N}) == NFElement(make_rational(d - 1, d));
        if (!locus.cN_identity_ok)
            throw InternalContradiction("non-nef locus: c_N != (d-1)/d in the k = d-1 case");
        for (int i : S) {
            // a line through e_{j1}, e_{j2} with j1, j2 in S \ {i} lies in Sigma_{{i,t}}
            std::vector<int> others;
            for (int j : S)
                if (j != i) others.push_back(j);
            const int j1 = others[0], j2 = others[1];
            CurveDatum line{1,
                            {{{j1, N}, 1}, {{j2, N}, 1}},
                            "line through e_" + std::to_string(j1) + ", e_" +
                                std::to_string(j2)};
            NFElement value = certified_negative(inv, line);
            locus.components.push_back({{i, t}, std::move(line), std::move(value)});
        }
    }

    // dimension bounds 1 <= dim Sigma_I <= d - 2
    for (const auto& comp : locus.components) {
        const int dim = d - static_cast<int>(comp.I.size());
        if (dim < 1 || dim > d - 2)
            throw InternalContradiction("non-nef locus: component dimension " +
                                        std::to_string(dim) + " out of [1, d-2]");
    }
    return locus;
}

ContainmentReport check_Enn_in_indeterminacy(const NonNefLocus& locus, int d,
                                             int samples_per_component, unsigned seed) {
    ContainmentReport rep{true, samples_per_component, true};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(1, 97);
    for (const auto& comp : locus.components) {
        if (comp.I.size() < 2) rep.descriptors_codim_ge_2 = false;
        for (int s = 0; s < samples_per_component; ++s) {
            QVector v(d + 1);
            for (int j = 0; j <= d; ++j) v(j) = Rational(num(rng));
            for (int j : comp.I) v(j) = 0;
            if (!indeterminacy_member(ProjPoint(std::move(v)))) rep.samples_indeterminate = false;
        }
    }
    if (!rep.ok())
        throw InternalContradiction("non-nef locus: a component escapes the indeterminacy set");
    return rep;
}

StarGate star_gate(const NoetherianMap& f, SpectralData& sd, const InvariantClass& inv) {
    Classification cl = classify(f);
    if (cl.S.empty())
        return StarGate{true, "no singular orbits: alpha = H is nef", true, true};
    if (!sd.gt_one)
        return StarGate{false, "lambda <= 1: dynamically degenerate", true, false};

    bool a_nonzero = true;
    for (int i : cl.S)
        if (f.a()[static_cast<size_t>(i)] == 0) a_nonzero = false;
    bool lam_bound = sd.lambda.compare(Rational(f.d() - 1)) >= 0;

    // cross-check via Lemma-level identity: lambda >= d-1  <=>  sum c_{i,1} <= 1
    NFElement first_sum{Rational(0)};
    for (int i : cl.S) first_sum += inv.c.at({i, 1});
    bool sum_bound = nf_sign(first_sum - NFElement(Rational(1))) <= 0;
    if (sum_bound != lam_bound)
        throw InternalContradiction("star gate: sum c_{i,1} <= 1 disagrees with lambda >= d-1");

    if (a_nonzero && lam_bound)
        return StarGate{true, "a_i != 0 on S and lambda >= d-1", true, true};
    std::string reason = !a_nonzero ? "some a_i = 0 with i in S" : "lambda < d - 1";
    return StarGate{false, std::move(reason), a_nonzero, lam_bound};
}

}  // namespace noedyn
