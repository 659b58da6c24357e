#include "noedyn/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace noedyn {

namespace {

constexpr double kUnderflow = 1e-12;
constexpr int kShardSize = 1024;

unsigned shard_seed(unsigned master, int shard) {
    // splitmix-style derivation so shard streams are decorrelated
    unsigned x = master + 0x9e3779b9u * static_cast<unsigned>(shard + 1);
    x ^= x >> 16;
    x *= 0x85ebca6bu;
    x ^= x >> 13;
    return x;
}

double sup_norm(const CPoint& x) {
    double m = 0;
    for (const auto& z : x) m = std::max(m, std::abs(z));
    return m;
}

double l2_norm(const CPoint& x) {
    double s = 0;
    for (const auto& z : x) s += std::norm(z);
    return std::sqrt(s);
}

CPoint gaussian_point(std::mt19937& rng, int d) {
    std::normal_distribution<double> g(0.0, 1.0);
    CPoint x(static_cast<size_t>(d + 1));
    for (auto& z : x) z = {g(rng), g(rng)};
    double n = l2_norm(x);
    for (auto& z : x) z /= n;
    return x;
}

}  // namespace

bool apply_f_numeric(const NoetherianMap& f, CPoint& x) {
    const size_t n = x.size();
    // J: j-th coordinate is the product of the others
    CPoint jx(n);
    for (size_t j = 0; j < n; ++j) {
        std::complex<double> prod(1.0, 0.0);
        for (size_t i = 0; i < n; ++i)
            if (i != j) prod *= x[i];
        jx[j] = prod;
    }
    CPoint y(n, {0.0, 0.0});
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            y[r] += (f.a()[c].get_d() - (r == c ? 1.0 : 0.0)) * jx[c];
    double m = sup_norm(y);
    if (!(m > kUnderflow)) return false;
    for (auto& z : y) z /= m;
    x = std::move(y);
    return true;
}

double DivisorPotential::eval(const CPoint& x) const {
    const double nrm = l2_norm(x);
    double u = 0;
    for (const auto& t : terms) {
        std::complex<double> lx(0.0, 0.0);
        for (size_t j = 0; j < t.form.size(); ++j) lx += t.form[j] * x[j];
        u += t.weight * std::log(std::abs(lx) / nrm);
    }
    return u;
}

DivisorPotential build_potential(const NoetherianMap& f, const InvariantClass& inv) {
    Classification cl = classify(f);
    if (cl.S.empty())
        throw UnsupportedConfiguration("potential: at least one singular orbit required");
    if (!cl.equal_lengths())
        throw UnsupportedConfiguration("potential: equal orbit lengths required");
    const int N = cl.N.front();
    std::vector<int> S = cl.S;
    std::sort(S.begin(), S.end());

    DivisorPotential u;
    for (int l = 1; l <= N; ++l) {
        // exact hyperplane through {p_{i,l}}_{i in S}: least-index null vector
        QMatrix A(static_cast<Eigen::Index>(S.size()), f.d() + 1);
        for (size_t r = 0; r < S.size(); ++r) {
            ProjPoint p = orbit_point_closed_form(f, S[r], l);
            for (int c = 0; c <= f.d(); ++c)
                A(static_cast<Eigen::Index>(r), c) = p[c];
        }
        auto ns = null_space(A, qzero);
        if (ns.empty())
            throw std::runtime_error("potential: hyperplane system is singular at level " +
                                     std::to_string(l));
        DivisorPotential::Term term;
        term.weight = inv.c.at({S.front(), l}).to_double();
        if (!(term.weight > 0))
            throw InternalContradiction("potential: nonpositive weight at level " +
                                        std::to_string(l));
        for (int c = 0; c <= f.d(); ++c) term.form.push_back(ns.front()(c).get_d());
        u.terms.push_back(std::move(term));
    }
    return u;
}

SamplingReport l1_trend(const NoetherianMap& f, const DivisorPotential& u, double lambda,
                        int n_max, int samples, unsigned seed) {
    if (!(lambda > 1.0))
        throw UnsupportedConfiguration("l1 trend: lambda > 1 required");
    SamplingReport rep;
    for (int n = 1; n <= n_max; ++n) rep.n_values.push_back(n);
    rep.sample_count = samples;
    rep.seed = seed;
    rep.dropped = 0;

    std::vector<double> sums(static_cast<size_t>(n_max), 0.0);
    const int shards = (samples + kShardSize - 1) / kShardSize;
    for (int sh = 0; sh < shards; ++sh) {
        std::mt19937 rng(shard_seed(seed, sh));
        const int count = std::min(kShardSize, samples - sh * kShardSize);
        for (int s = 0; s < count; ++s) {
            CPoint x = gaussian_point(rng, f.d());
            std::vector<double> vals;
            bool ok = true;
            double lam_pow = 1.0;
            for (int n = 1; n <= n_max; ++n) {
                if (!apply_f_numeric(f, x)) {
                    ok = false;
                    break;
                }
                lam_pow *= lambda;
                double un = u.eval(x);
                if (!std::isfinite(un)) {
                    ok = false;
                    break;
                }
                vals.push_back(std::abs(un) / lam_pow);
            }
            if (!ok) {
                ++rep.dropped;
                continue;
            }
            for (int n = 0; n < n_max; ++n) sums[static_cast<size_t>(n)] += vals[static_cast<size_t>(n)];
        }
    }
    const int kept = samples - rep.dropped;
    for (int n = 0; n < n_max; ++n)
        rep.estimates.push_back(kept > 0 ? sums[static_cast<size_t>(n)] / kept : 0.0);
    rep.reliable = rep.dropped * 100 < samples;
    return rep;
}

SquaringChartReport squaring_chart_study(int n_max, int samples, unsigned seed) {
    SquaringChartReport rep;
    rep.max_identity_residual = 0;
    for (int n = 1; n <= n_max; ++n) rep.n_values.push_back(n);
    std::vector<int> below(static_cast<size_t>(n_max), 0);
    bool containment = true;

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        // (s, eta) uniform on the unit bidisk; eta plays no role in the value
        double r = std::sqrt(unif(rng));
        double theta = 2 * M_PI * unif(rng);
        double log_abs_s = std::log(r);
        (void)theta;

        // f: (s, eta) -> (s^2, eta^2), tracked in log modulus to dodge underflow
        double log_abs_sn = log_abs_s;
        for (int n = 1; n <= n_max; ++n) {
            log_abs_sn *= 2.0;                       // |s o f| = |s|^2
            double value = std::ldexp(log_abs_sn, -n);  // (1/2^n) log|s o f^n|
            rep.max_identity_residual =
                std::max(rep.max_identity_residual, std::abs(value - log_abs_s));
            if (value < -1.0) ++below[static_cast<size_t>(n - 1)];
            if (r < std::exp(-1.0) && !(value < -1.0)) containment = false;
        }
    }

    for (int n = 0; n < n_max; ++n)
        rep.volumes.push_back(static_cast<double>(below[static_cast<size_t>(n)]) / samples);
    // P(|s| < 1/e) = e^{-2} for s uniform on the unit disk
    const double p = std::exp(-2.0);
    const double se = std::sqrt(p * (1 - p) / samples);
    rep.volume_floor = p - 3 * se;
    rep.volume_nonvanishing = true;
    for (double v : rep.volumes)
        if (v < rep.volume_floor) rep.volume_nonvanishing = false;
    rep.containment_ok = containment;
    rep.identity_ok = rep.max_identity_residual <= 1e-12;
    if (!rep.identity_ok)
        throw InternalContradiction("squaring-map chart model: pointwise identity violated beyond 1e-12");
    return rep;
}

double telescoping_selftest(const NoetherianMap& f, const DivisorPotential& u, double lambda,
                            int n, int samples, unsigned seed) {
    if (!(lambda > 1.0))
        throw UnsupportedConfiguration("telescoping self-test: lambda > 1 required");
    double worst = 0;
    std::mt19937 rng(seed);
    for (int s = 0; s < samples; ++s) {
        CPoint x = gaussian_point(rng, f.d());
        // record u along the orbit x, f x, .., f^n x
        std::vector<double> uvals{u.eval(x)};
        bool ok = std::isfinite(uvals[0]);
        CPoint y = x;
        for (int i = 1; ok && i <= n; ++i) {
            if (!apply_f_numeric(f, y)) {
                ok = false;
                break;
            }
            uvals.push_back(u.eval(y));
            ok = std::isfinite(uvals.back());
        }
        if (!ok) continue;
        double acc = 0, lam_pow = 1.0;
        for (int i = 0; i < n; ++i) {
            double gamma = uvals[static_cast<size_t>(i)] - uvals[static_cast<size_t>(i + 1)] / lambda;
            acc += gamma / lam_pow;
            lam_pow *= lambda;
        }
        double residual = std::abs(uvals[0] - acc - uvals[static_cast<size_t>(n)] / lam_pow);
        worst = std::max(worst, residual);
    }
    if (worst > 1e-9)
        throw InternalContradiction("telescoping self-test: residual " + std::to_string(worst));
    return worst;
}

}  // namespace noedyn
