#include "noedyn/grid.hpp"

#include <algorithm>

namespace noedyn {

namespace {

bool singular_form(const Rational& r) { return singular_orbit_length(r).has_value(); }

// deterministic non-singular fillers for the m free parameters, summing to
// `rest`: 1/(5+t) for the first m-1, remainder last, perturbed by 1/1009 if
// the remainder lands on a singular form
bool make_fillers(int m, const Rational& rest, std::vector<Rational>& out) {
    out.clear();
    if (m == 0) return rest == 0;
    Rational head(0);
    for (int t = 0; t + 1 < m; ++t) {
        out.push_back(make_rational(1, 5 + t));
        head += out.back();
    }
    Rational last = rest - head;
    if (!singular_form(last)) {
        out.push_back(last);
        return true;
    }
    if (m >= 2) {
        const Rational delta = make_rational(1, 1009);
        out.front() += delta;
        last -= delta;
        if (!singular_form(out.front()) && !singular_form(last)) {
            out.push_back(last);
            return true;
        }
    }
    return false;
}

void enumerate_multisets(int size, int n_max, int min_len, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int n = min_len; n <= n_max; ++n) {
        cur.push_back(n);
        enumerate_multisets(size, n_max, n, cur, out);
        cur.pop_back();
    }
}

}  // namespace

GridEnumeration enumerate_grid(int d_max, int n_max) {
    GridEnumeration en{{}, 0, 0};
    for (int d = 3; d <= d_max; ++d) {
        for (int s = 1; s <= d + 1; ++s) {
            std::vector<std::vector<int>> multisets;
            std::vector<int> cur;
            enumerate_multisets(s, n_max, 1, cur, multisets);
            for (const auto& N : multisets) {
                const int l = static_cast<int>(std::count(N.begin(), N.end(), 1));
                if (d - l < 3) {
                    ++en.skipped_small_dl;
                    continue;
                }
                Rational sum(0);
                std::vector<Rational> a;
                for (int n : N) {
                    a.push_back(make_rational(n - 1, n));
                    sum += a.back();
                }
                std::vector<Rational> fillers;
                if (!make_fillers(d + 1 - s, Rational(2) - sum, fillers)) {
                    ++en.skipped_unfillable;
                    continue;
                }
                for (const auto& r : fillers) a.push_back(r);
                en.configs.push_back(GridConfig{d, l, N, std::move(a)});
            }
        }
    }
    return en;
}

GridCheck verify_configuration(const GridConfig& cfg) {
    GridCheck chk{true, true, true, true, ""};
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (chk.detail.empty()) chk.detail = what;
    };

    NoetherianMap f(cfg.d, cfg.a);
    Classification cl = classify(f);
    if (cl.N != cfg.N || cl.l != cfg.l) {
        fail(chk.orbits_ok, "classification disagrees with the configuration");
        return chk;
    }

    // orbit iteration vs closed form (orbit() cross-checks internally and
    // throws on mismatch), singular lengths vs the (N-1)/N criterion
    for (int i = 0; i <= cfg.d; ++i) {
        OrbitRecord rec = orbit(f, i, 50);
        auto want = singular_orbit_length(cfg.a[static_cast<size_t>(i)]);
        if (want.has_value() != rec.singular ||
            (want.has_value() && *want != rec.length && rec.length <= 50))
            fail(chk.orbits_ok, "orbit length mismatch at index " + std::to_string(i));
    }

    auto [model, M] = build_pullback(f);
    if (char_poly(M) != closed_form_charpoly(cfg.d, cfg.l, cfg.N))
        fail(chk.charpoly_ok, "closed-form characteristic polynomial mismatch");

    SpectralData sd = dynamical_degree(M);
    if (!sd.gt_one) {
        // lambda <= 1: dynamically degenerate, the eigenvalue identities
        // (which divide by lambda^N - 1) and the nef dichotomy are vacuous
        chk.detail = "degenerate: lambda <= 1, spectral checks vacuous";
        return chk;
    }
    if (!lambda_within_bounds(sd, cfg.d, cfg.l))
        fail(chk.lemma_ok, "lambda outside [d-l-1, d]");
    auto base = std::make_shared<AlgebraicNumber>(sd.lambda);
    try {
        // eigen-equation mode keeps the largest configurations affordable
        InvariantClass inv = invariant_class(model, M, base, /*full_solve=*/model.dim() <= 8);
        if (!inv.ok()) fail(chk.lemma_ok, "invariant-class identity failed");

        NefVerdict verdict = nef_decide(f, inv, base);
        if (verdict.nef != (cl.S.size() <= 1))
            fail(chk.nef_ok, "nef verdict disagrees with |S|");
        if (!verdict.nef && (!verdict.certificate || nf_sign(verdict.certificate_value) >= 0 ||
                             !verdict.supporting_inequality_ok))
            fail(chk.nef_ok, "missing or non-negative nef certificate");
    } catch (const std::exception& e) {
        fail(chk.lemma_ok, std::string("invariant class/nef: ") + e.what());
    }
    return chk;
}

}  // namespace noedyn
