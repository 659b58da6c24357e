#pragma once

#include "noedyn/matrix.hpp"
#include "noedyn/noether.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace noedyn {

/// Raised when a requested model lies outside the supported configurations
/// (as opposed to an internal computation error).
class UnsupportedConfiguration : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Cohomology basis on the blow-up X (or Y): H first, then the exceptional
/// classes P_{i,j} lexicographic in (i, j), then optionally F. The ordering
/// is fixed so matrices are reproducible byte-for-byte.
class BlowupModel {
  public:
    struct Center {
        int i;        // orbit index
        int j;        // step within the orbit, 1-based
        ProjPoint p;  // blow-up center p_{i,j}
    };

    BlowupModel(int d, std::vector<Center> centers, bool with_F);
    /// Fixture constructor: explicit labels, no center bookkeeping.
    BlowupModel(int d, std::vector<std::string> labels);

    int d() const { return d_; }
    bool has_F() const { return with_F_; }
    Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.size()); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<Center>& centers() const { return centers_; }

    /// Basis slot of P_{i,j}; throws if (i, j) is not a center.
    Eigen::Index slot(int i, int j) const;
    /// Basis slot of F; throws if the model has none.
    Eigen::Index f_slot() const;

    bool operator==(const BlowupModel& o) const {
        return d_ == o.d_ && with_F_ == o.with_F_ && basis_ == o.basis_;
    }

  private:
    int d_;
    bool with_F_;
    std::vector<std::string> basis_;
    std::vector<Center> centers_;  // aligned with basis slots 1..centers.size()
};

/// A class written in the model basis. Coefficients are stored raw (with
/// sign), so alpha_f = H - c.E has coeffs (1, -c_{0,1}, ..). The model is
/// held by value, so classes stay valid independently of the source model's
/// lifetime.
struct DivisorClass {
    BlowupModel model;
    NFVector coeffs;  // length = model.dim()

    DivisorClass(const BlowupModel& m, NFVector c);
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const NFElement& s, const DivisorClass& a);

/// An irreducible curve recorded by degree and multiplicities at the
/// blow-up centers; intersection numbers are taken against its strict
/// transform.
struct CurveDatum {
    int degree;
    std::map<std::pair<int, int>, int> mults;  // (i, j) -> mult at p_{i,j}
    std::string label;
};

/// beta . C~ = b_0 deg(C) + sum coeffs[slot(i,j)] mult_{i,j} (the exceptional
/// coefficients carry their own sign).
NFElement intersect(const DivisorClass& beta, const CurveDatum& C);

/// The 1-regular model of f: blow up every singular-orbit point. The matrix
/// M has column(beta) = coordinates of f*(beta):
///   f*(H)       = dH - (d-1) sum_{i in S} P_{i,N_i}
///   f*(P_{i,j+1}) = P_{i,j}
///   f*(P_{i,1}) = H - sum_{j in S, j != i} P_{j,N_j}   (strict transform of Sigma_i)
std::pair<BlowupModel, QMatrix> build_pullback(const NoetherianMap& f);

/// The further blow-up Y of X along the non-nef locus line, defined for
/// d = 3, |S| = 2, N_0 = N_1 = N >= 2 only. Basis gains F (last); the action
/// sends F to 0 and adds -F to the H column. Throws UnsupportedConfiguration
/// otherwise (in particular for |S| = 3).
std::pair<BlowupModel, QMatrix> build_Y_model(const NoetherianMap& f);

/// The cubic-involution example on P^3 as a cohomology-level fixture:
/// basis <H, E0, E23, E13>, together with the stated intersection facts for
/// the generic line sigma inside E23.
struct P3CubicFixture {
    BlowupModel model;
    QMatrix matrix;
    Polynomial charpoly;              // x^4 - x^3 - 3x^2 + x + 2
    QVector alpha;                    // H - E0 - E23
    QVector pullback_alpha;           // H - E0 + E23
    std::map<std::string, Rational> sigma_table;  // sigma . basis element
    Rational pullback_dot_sigma;      // (H - E0 + E23) . sigma = -1
    bool pullback_leaves_psef;        // f*(alpha) is not psef
};

P3CubicFixture fixture_p3_cubic();

/// The diagonal automorphism-like fixture: f* = diag(lambda, lambda) on
/// basis <H, E>, with E psef, E.E = -1, and E not nef.
struct DiagonalFixture {
    BlowupModel model;
    QMatrix matrix;
    Rational self_intersection_E;  // -1
    bool E_psef;
    bool E_nef;
};

DiagonalFixture fixture_diagonal_blowup(int lambda);

}  // namespace noedyn
