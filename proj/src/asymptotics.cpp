#include "noedyn/asymptotics.hpp"

#include <cmath>

namespace noedyn {

namespace {

constexpr int kFloatBits = 512;

// high-precision value of an algebraic number (refined to ~40 decimal digits)
mpf_class to_mpf(AlgebraicNumber& a) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 40);
    a.refine_to_width(Rational(mpz_class(1), scale));
    return mpf_class(a.midpoint(), kFloatBits);
}

std::vector<int> log_schedule(int n_max) {
    std::vector<int> out;
    static const int steps[] = {1, 2, 5};
    for (long base = 10; base <= n_max; base *= 10)
        for (int s : steps) {
            long n = base * s;
            if (n <= n_max) out.push_back(static_cast<int>(n));
        }
    if (out.empty() || out.back() != n_max) out.push_back(n_max);
    return out;
}

std::vector<double> normalize(const std::vector<mpf_class>& v) {
    mpf_class norm2(0, kFloatBits);
    for (const auto& x : v) norm2 += x * x;
    double n = std::sqrt(mpf_class(norm2).get_d());
    std::vector<double> out;
    for (const auto& x : v) out.push_back(n > 0 ? x.get_d() / n : 0.0);
    return out;
}

double direction_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double dm = 0, dp = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        dm += (a[i] - b[i]) * (a[i] - b[i]);
        dp += (a[i] + b[i]) * (a[i] + b[i]);
    }
    return std::sqrt(std::min(dm, dp));
}

}  // namespace

int jordan_index(const QMatrix& M, const AlgebraicNumberPtr& lambda) {
    const Eigen::Index n = M.rows();
    NFMatrix A = to_nf(M, lambda);
    const NFElement lam = NFElement::generator(lambda);
    for (Eigen::Index i = 0; i < n; ++i) A(i, i) = A(i, i) - lam;

    int prev = rank_of(A, nfzero);
    if (prev == static_cast<int>(n))
        throw std::invalid_argument("jordan index: lambda is not an eigenvalue");
    NFMatrix P = A;
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        NFMatrix Q = P * A;
        int r = rank_of(Q, nfzero);
        if (r == prev) return k;
        prev = r;
        P = std::move(Q);
    }
    throw std::logic_error("jordan index: rank sequence failed to stabilize");
}

CesaroRun cesaro(const QMatrix& M, const QVector& beta, int N_max, AlgebraicNumber& lambda,
                 int m, const std::vector<double>& eigendirection) {
    if (lambda.compare(Rational(1)) <= 0)
        throw UnsupportedConfiguration("cesaro: lambda > 1 required");
    if (m < 1) throw std::invalid_argument("cesaro: jordan index m >= 1 required");

    const Eigen::Index n = M.rows();
    const mpf_class lam_f = to_mpf(lambda);
    std::vector<int> schedule = log_schedule(N_max);

    CesaroRun run;
    run.N_values = schedule;
    QVector v = beta;                    // exact M^k beta
    mpf_class lam_pow(1, kFloatBits);    // lambda^k
    std::vector<mpf_class> acc(static_cast<size_t>(n), mpf_class(0, kFloatBits));
    size_t next = 0;
    for (int k = 1; k <= N_max && next < schedule.size(); ++k) {
        v = M * v;
        lam_pow *= lam_f;
        mpf_class weight(1, kFloatBits);
        for (int t = 1; t < m; ++t) weight *= k;
        weight *= lam_pow;
        for (Eigen::Index i = 0; i < n; ++i)
            acc[static_cast<size_t>(i)] += mpf_class(v(i), kFloatBits) / weight;
        if (k == schedule[next]) {
            std::vector<mpf_class> mean;
            for (const auto& x : acc) mean.push_back(x / k);
            std::vector<double> dir = normalize(mean);
            run.errors.push_back(direction_distance(dir, eigendirection));
            run.directions.push_back(std::move(dir));
            ++next;
        }
    }

    // least-squares slope of log(error) against log(N)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (size_t t = 0; t < run.errors.size(); ++t) {
        if (run.errors[t] <= 0) continue;
        double x = std::log(static_cast<double>(run.N_values[t]));
        double y = std::log(run.errors[t]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    run.fitted_decay_exponent =
        cnt >= 2 ? (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx) : 0.0;
    return run;
}

GrowthReport growth_check(const QMatrix& M, const QVector& v0, AlgebraicNumber& lambda, int m,
                          int n_max) {
    const Eigen::Index n = M.rows();
    const mpf_class lam_f = to_mpf(lambda);
    GrowthReport rep{0, 0, false, {}};
    QVector v = v0;
    mpf_class lam_pow(1, kFloatBits);
    for (int k = 1; k <= n_max; ++k) {
        v = M * v;
        lam_pow *= lam_f;
        mpf_class norm2(0, kFloatBits);
        for (Eigen::Index i = 0; i < n; ++i) {
            mpf_class x(v(i), kFloatBits);
            norm2 += x * x;
        }
        mpf_class weight(1, kFloatBits);
        for (int t = 1; t < m; ++t) weight *= k;
        weight *= lam_pow;
        mpf_class ratio = sqrt(norm2) / weight;
        double r = ratio.get_d();
        rep.ratios.push_back(r);
        if (k == 1) {
            rep.c1 = rep.c2 = r;
        } else {
            rep.c1 = std::min(rep.c1, r);
            rep.c2 = std::max(rep.c2, r);
        }
    }
    rep.consistent = rep.c1 > 0 && rep.c2 / rep.c1 <= 1e3;
    return rep;
}

}  // namespace noedyn
