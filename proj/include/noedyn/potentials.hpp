#pragma once

#include "noedyn/spectral.hpp"

#include <complex>
#include <vector>

namespace noedyn {

using CPoint = std::vector<std::complex<double>>;  // homogeneous coordinates

/// One floating-point application of f = L o J; false when the image
/// underflows (the orbit approached the indeterminacy set). The result is
/// sup-normalized.
bool apply_f_numeric(const NoetherianMap& f, CPoint& x);

/// A weighted sum of Fubini-Study-normalized hyperplane potentials:
/// u(x) = sum_t w_t log(|l_t(x)| / ||x||) <= O(1).
struct DivisorPotential {
    struct Term {
        double weight;              // positive
        std::vector<double> form;   // d+1 coefficients of the linear form
    };
    std::vector<Term> terms;

    /// Evaluates u at a homogeneous point; -inf on a hyperplane.
    double eval(const CPoint& x) const;
};

/// The effective-representation potential of alpha_f: for each level
/// l = 1..N one hyperplane through the orbit points {p_{i,l}}_{i in S}
/// (least-index exact solution of the linear system), with weight c_l.
/// Requires |S| >= 1 and equal orbit lengths.
DivisorPotential build_potential(const NoetherianMap& f, const InvariantClass& inv);

struct SamplingReport {
    std::vector<int> n_values;
    std::vector<double> estimates;  // sample means of |(1/lambda^n) u(f^n x)|
    int sample_count;
    unsigned seed;
    int dropped;
    bool reliable;  // dropped / sample_count < 1%
};

/// Monte Carlo trend of (1/lambda^n) u o f^n in L^1: Fubini-Study-uniform
/// samples (normalized complex Gaussians), deterministic for a given
/// (seed, samples) regardless of sharding. Requires lambda > 1.
SamplingReport l1_trend(const NoetherianMap& f, const DivisorPotential& u, double lambda,
                        int n_max, int samples, unsigned seed);

/// The squaring map on P^2 blown up at its totally invariant point, in the
/// chart (s, eta) -> [1 : s : s eta] where the exceptional fiber is {s = 0}
/// and f acts by (s, eta) -> (s^2, eta^2): the normalized potential satisfies
/// (1/2^n) log|s o f^n| = log|s| pointwise, so the sublevel volume cannot
/// shrink.
struct SquaringChartReport {
    double max_identity_residual;    // pointwise identity, tolerance 1e-12
    bool identity_ok;
    std::vector<int> n_values;
    std::vector<double> volumes;     // empirical Vol((1/2^n) v o f^n < -1)
    double volume_floor;             // P(|s| < 1/e) minus 3 standard errors
    bool volume_nonvanishing;        // every volume >= the floor
    bool containment_ok;             // {|s| < 1/e} subset {value < -1} on samples
};

SquaringChartReport squaring_chart_study(int n_max, int samples, unsigned seed);

/// Pipeline self-test: with gamma(x) = u(x) - (1/lambda) u(f x), the
/// telescoping identity u(x) = sum_{i<n} gamma(f^i x)/lambda^i
/// + u(f^n x)/lambda^n holds algebraically; returns the max floating
/// residual over the sampled orbits (failures mean evaluation bugs).
double telescoping_selftest(const NoetherianMap& f, const DivisorPotential& u, double lambda,
                            int n, int samples, unsigned seed = 7);

}  // namespace noedyn
