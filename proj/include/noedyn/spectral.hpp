#pragma once

#include "noedyn/cohmodel.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace noedyn {

/// Raised when two independent computations of the same quantity disagree
/// (an internal bug or a falsified expectation, never user error).
class InternalContradiction : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// The closed-form characteristic polynomial of the pullback on the blow-up:
///   chi(x) = (x-1)^l [ (x-(d-l)) prod_{j=l..k} (x^{N_j}-1)
///                      + (x-1) sum_{j=l..k} prod_{i != j} (x^{N_i}-1) ]
/// N must be sorted ascending with the first l entries equal to 1; throws
/// UnsupportedConfiguration when the orbit set is empty (the model is <H>).
Polynomial closed_form_charpoly(int d, int l, const std::vector<int>& N);

struct SpectralData {
    Polynomial charpoly;
    AlgebraicNumber lambda;   // largest real root of charpoly
    bool gt_one;              // lambda > 1 exactly; false marks a degenerate map
    bool simple;              // root multiplicity 1 (exact)
    bool exact_real_unique;   // Sturm: no other real root outside [-1, 1]
    bool numeric_complex_ok;  // floating check: complex spectrum inside 1 + 1e-9
    bool unique_modulus_gt1;  // both layers agree lambda is the only such eigenvalue
    std::string method;       // uniqueness method tags
};

/// Certified largest eigenvalue of a pullback matrix. Real uniqueness is
/// exact (Sturm counts on (1, inf) and (-inf, -1)); the complex layer is a
/// floating defensive check with tolerance 1e-9, tagged as such.
SpectralData dynamical_degree(const QMatrix& M);

/// Exact bound check d - l - 1 <= lambda <= d.
bool lambda_within_bounds(SpectralData& sd, int d, int l);

struct InvariantClass {
    DivisorClass alpha;                          // H - sum c_{i,j} P_{i,j}
    std::map<std::pair<int, int>, NFElement> c;  // (i, j) -> c_{i,j} > 0
    bool matches_nullspace;    // closed forms == exact eigenvector solve
    bool sum_first_is_d_minus_lambda;  // sum_i c_{i,1} = d - lambda
    bool unit_orbit_sums;              // sum_j c_{i,j} = 1 per orbit
    bool first_coeffs_positive;        // c_{i,1} > 0
    bool ok() const {
        return matches_nullspace && sum_first_is_d_minus_lambda && unit_orbit_sums &&
               first_coeffs_positive;
    }
};

/// The normalized invariant class alpha_f = H - c.E over Q(lambda),
/// computed from the closed forms c_{i,1} = (lambda-1)/(lambda^{N_i}-1),
/// c_{i,j+1} = lambda c_{i,j} and cross-checked against M. With full_solve
/// the cross-check is an exact null-space solve of M - lambda I (requires
/// lambda simple); otherwise it verifies M v = lambda v, which is cheaper on
/// large models. Throws InternalContradiction on any disagreement.
InvariantClass invariant_class(const BlowupModel& model, const QMatrix& M,
                               const AlgebraicNumberPtr& lambda, bool full_solve = true);

}  // namespace noedyn
