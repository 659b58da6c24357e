#pragma once

#include "noedyn/matrix.hpp"
#include "noedyn/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace noedyn {

/// Point of P^d in canonical form: first nonzero coordinate equals 1, so
/// projective equality is literal field equality of the coordinate vectors.
class ProjPoint {
  public:
    explicit ProjPoint(QVector coords);
    ProjPoint(std::initializer_list<long> coords);

    const QVector& coords() const { return c_; }
    Eigen::Index dim() const { return c_.size() - 1; }  // ambient P^d dimension
    const Rational& operator[](Eigen::Index i) const { return c_(i); }

    int zero_count() const;
    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

    /// Standard coordinate point e_i.
    static ProjPoint unit(Eigen::Index dim, Eigen::Index i);

    std::string str() const;

  private:
    QVector c_;
};

/// x lies in the indeterminacy set of f = L o J iff at least two homogeneous
/// coordinates vanish.
bool indeterminacy_member(const ProjPoint& x);

/// The map f = L o J with L determined by parameters a_0..a_d, sum = 2.
class NoetherianMap {
  public:
    NoetherianMap(int d, std::vector<Rational> a);

    int d() const { return d_; }
    const std::vector<Rational>& a() const { return a_; }

    /// The involutive linear factor: L(r, c) = a_c - [r == c].
    QMatrix linear_matrix() const;
    /// p_i = f(Sigma_i), the i-th column of L (canonicalized).
    ProjPoint collapse_point(int i) const;

  private:
    int d_;
    std::vector<Rational> a_;
};

/// J alone (coordinatewise reciprocal, cleared of inverses); nullopt when
/// every coordinate product vanishes.
std::optional<ProjPoint> apply_reciprocal(const ProjPoint& x);

/// L o J; nullopt encodes Indeterminate.
std::optional<ProjPoint> evaluate(const NoetherianMap& f, const ProjPoint& x);

/// f^{-1} = J o L.
std::optional<ProjPoint> evaluate_inverse(const NoetherianMap& f, const ProjPoint& x);

/// Closed-form orbit point p_{i,j} (j >= 1); the degenerate denominator case
/// yields e_i.
ProjPoint orbit_point_closed_form(const NoetherianMap& f, int i, int j);

struct OrbitRecord {
    int index;
    bool singular;       // proved singular (exact); otherwise bounded-horizon only
    int length;          // N_i when singular, the horizon otherwise
    std::vector<ProjPoint> points;  // p_{i,1} .. (terminates at e_i when singular)
};

/// Iterates p_i exactly, cross-checking every point against the closed form.
/// Throws std::logic_error on a closed-form mismatch (arithmetic bug).
OrbitRecord orbit(const NoetherianMap& f, int i, int horizon);

/// True iff a = (N-1)/N for a positive integer N; returns N.
std::optional<int> singular_orbit_length(const Rational& a);

struct Classification {
    std::vector<int> S;       // singular indices, sorted by (N_i, index)
    std::vector<int> N;       // lengths, ascending
    int l = 0;                // #{i in S : a_i = 0}
    int k = -1;               // |S| - 1
    bool equal_lengths() const {
        return !N.empty() && N.front() == N.back();
    }
};

Classification classify(const NoetherianMap& f);

struct RegularityReport {
    bool singular_orbits_end_at_unit = true;
    bool nonsingular_orbits_avoid_indeterminacy = true;
    bool orbits_pairwise_disjoint = true;
    bool points_distinct_within_orbit = true;
    int horizon = 0;
    std::vector<std::string> violations;
    bool ok() const {
        return singular_orbits_end_at_unit && nonsingular_orbits_avoid_indeterminacy &&
               orbits_pairwise_disjoint && points_distinct_within_orbit;
    }
};

/// Desk-scale verification of the structural facts the blow-up model needs.
RegularityReport regularity_report(const NoetherianMap& f, int horizon);

}  // namespace noedyn
