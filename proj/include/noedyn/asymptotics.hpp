#pragma once

#include "noedyn/spectral.hpp"

#include <vector>

namespace noedyn {

/// Size of the largest Jordan block of lambda: the smallest k with
/// rank((M - lambda I)^k) = rank((M - lambda I)^{k+1}), computed exactly
/// over Q(lambda). Throws if lambda is not an eigenvalue of M.
int jordan_index(const QMatrix& M, const AlgebraicNumberPtr& lambda);

struct CesaroRun {
    std::vector<int> N_values;
    std::vector<std::vector<double>> directions;  // normalized Lambda_N beta
    std::vector<double> errors;                   // distance to the eigendirection
    double fitted_decay_exponent;                 // least-squares slope of log err vs log N
};

/// Cesaro means Lambda_N beta = (1/N) sum_{n=1}^N M^n beta / (n^{m-1} lambda^n)
/// on a logarithmic schedule {10, 20, 50, ...} up to N_max. Matrix powers are
/// exact; the division by n^{m-1} lambda^n uses high-precision floats (lambda^n
/// overflows double well before N = 1000). `eigendirection` is the certified
/// invariant-class vector to measure convergence against. Requires lambda > 1.
CesaroRun cesaro(const QMatrix& M, const QVector& beta, int N_max, AlgebraicNumber& lambda,
                 int m, const std::vector<double>& eigendirection);

struct GrowthReport {
    double c1, c2;               // min / max of ||M^n v|| / (n^{m-1} lambda^n)
    bool consistent;             // c2 / c1 within slack 1e3 (m looks right)
    std::vector<double> ratios;  // one per n = 1..n_max
};

/// Verifies the two-sided growth ||M^n v|| ~ n^{m-1} lambda^n by bounding the
/// ratio over n <= n_max with exact powers and high-precision division.
GrowthReport growth_check(const QMatrix& M, const QVector& v, AlgebraicNumber& lambda, int m,
                          int n_max);

}  // namespace noedyn
