#include "noedyn/cohmodel.hpp"

#include <algorithm>

namespace noedyn {

namespace {

std::string center_label(int i, int j) {
    return "P" + std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

BlowupModel::BlowupModel(int d, std::vector<Center> centers, bool with_F)
    : d_(d), with_F_(with_F), centers_(std::move(centers)) {
    for (size_t a = 0; a < centers_.size(); ++a)
        for (size_t b = a + 1; b < centers_.size(); ++b)
            if (centers_[a].p == centers_[b].p)
                throw std::invalid_argument("blow-up model: centers " +
                                            center_label(centers_[a].i, centers_[a].j) + " and " +
                                            center_label(centers_[b].i, centers_[b].j) +
                                            " coincide at " + centers_[a].p.str());
    basis_.push_back("H");
    for (const auto& c : centers_) basis_.push_back(center_label(c.i, c.j));
    if (with_F_) basis_.push_back("F");
}

BlowupModel::BlowupModel(int d, std::vector<std::string> labels)
    : d_(d), with_F_(false), basis_(std::move(labels)) {}

Eigen::Index BlowupModel::slot(int i, int j) const {
    for (size_t s = 0; s < centers_.size(); ++s)
        if (centers_[s].i == i && centers_[s].j == j)
            return static_cast<Eigen::Index>(s + 1);
    throw std::out_of_range("blow-up model: no center " + center_label(i, j));
}

Eigen::Index BlowupModel::f_slot() const {
    if (!with_F_) throw std::out_of_range("blow-up model: no F class");
    return dim() - 1;
}

DivisorClass::DivisorClass(const BlowupModel& m, NFVector c) : model(m), coeffs(std::move(c)) {
    if (coeffs.size() != m.dim())
        throw std::invalid_argument("divisor class: coefficient length mismatch");
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    if (!(a.model == b.model)) throw std::invalid_argument("divisor class: model mismatch");
    return DivisorClass(a.model, a.coeffs + b.coeffs);
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    if (!(a.model == b.model)) throw std::invalid_argument("divisor class: model mismatch");
    return DivisorClass(a.model, a.coeffs - b.coeffs);
}

DivisorClass operator*(const NFElement& s, const DivisorClass& a) {
    NFVector c = a.coeffs;
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = s * c(i);
    return DivisorClass(a.model, std::move(c));
}

NFElement intersect(const DivisorClass& beta, const CurveDatum& C) {
    if (C.degree <= 0) throw std::invalid_argument("curve: degree must be positive");
    NFElement total = NFElement(Rational(C.degree)) * beta.coeffs(0);
    for (const auto& [ij, m] : C.mults) {
        if (m < 0) throw std::invalid_argument("curve: negative multiplicity");
        if (m == 0) continue;
        total += NFElement(Rational(m)) * beta.coeffs(beta.model.slot(ij.first, ij.second));
    }
    return total;
}

std::pair<BlowupModel, QMatrix> build_pullback(const NoetherianMap& f) {
    Classification cl = classify(f);
    // basis order is lexicographic in (i, j): resort the (index, length) pairs
    std::vector<std::pair<int, int>> sn;  // (i, N_i)
    for (size_t t = 0; t < cl.S.size(); ++t) sn.emplace_back(cl.S[t], cl.N[t]);
    std::sort(sn.begin(), sn.end());

    std::vector<BlowupModel::Center> centers;
    for (const auto& [i, n] : sn)
        for (int j = 1; j <= n; ++j)
            centers.push_back({i, j, orbit_point_closed_form(f, i, j)});
    BlowupModel model(f.d(), std::move(centers), false);

    const Eigen::Index n = model.dim();
    const Rational d(f.d());
    QMatrix M = QMatrix::Constant(n, n, Rational(0));
    // f*(H) = dH - (d-1) sum P_{i,N_i}
    M(0, 0) = d;
    for (const auto& [i, ni] : sn) M(model.slot(i, ni), 0) = 1 - d;
    for (const auto& [i, ni] : sn) {
        // f*(P_{i,j+1}) = P_{i,j}
        for (int j = 1; j < ni; ++j) M(model.slot(i, j), model.slot(i, j + 1)) = 1;
        // f*(P_{i,1}) = strict transform of Sigma_i = H - sum_{j != i} P_{j,N_j}
        Eigen::Index col = model.slot(i, 1);
        M(0, col) = 1;
        for (const auto& [j, nj] : sn)
            if (j != i) M(model.slot(j, nj), col) = -1;
    }
    return {std::move(model), std::move(M)};
}

std::pair<BlowupModel, QMatrix> build_Y_model(const NoetherianMap& f) {
    Classification cl = classify(f);
    if (f.d() != 3)
        throw UnsupportedConfiguration("Y model: defined on P^3 only (d = " +
                                       std::to_string(f.d()) + ")");
    if (cl.S.size() == 3)
        throw UnsupportedConfiguration(
            "Y model: |S| = 3 needs successive line blow-ups whose action is not modelled here");
    if (cl.S.size() != 2)
        throw UnsupportedConfiguration("Y model: |S| = 2 required (got |S| = " +
                                       std::to_string(cl.S.size()) + ")");
    if (!cl.equal_lengths() || cl.N.front() < 2)
        throw UnsupportedConfiguration("Y model: equal orbit lengths N >= 2 required");

    const int N = cl.N.front();
    std::vector<int> S = cl.S;
    std::sort(S.begin(), S.end());
    std::vector<BlowupModel::Center> centers;
    for (int i : S)
        for (int j = 1; j <= N; ++j) centers.push_back({i, j, orbit_point_closed_form(f, i, j)});
    BlowupModel model(3, std::move(centers), true);

    const Eigen::Index n = model.dim();
    QMatrix M = QMatrix::Constant(n, n, Rational(0));
    // f*(H) = 3H - 2P_{0,N} - 2P_{1,N} - F
    M(0, 0) = 3;
    for (int i : S) M(model.slot(i, N), 0) = -2;
    M(model.f_slot(), 0) = -1;
    for (int i : S) {
        for (int j = 1; j < N; ++j) M(model.slot(i, j), model.slot(i, j + 1)) = 1;
        Eigen::Index col = model.slot(i, 1);
        M(0, col) = 1;
        for (int j : S)
            if (j != i) M(model.slot(j, N), col) = -1;
    }
    // f*(F) = 0: column stays zero
    return {std::move(model), std::move(M)};
}

P3CubicFixture fixture_p3_cubic() {
    BlowupModel model(3, {"H", "E0", "E23", "E13"});
    QMatrix M(4, 4);
    M << 3, 1, 1, 1,  //
        -2, 0, -1, -1,  //
        -1, -1, -1, 0,  //
        -1, -1, 0, -1;
    P3CubicFixture fx{std::move(model),
                      M,
                      char_poly(M),
                      QVector(4),
                      QVector(4),
                      {{"H", 0}, {"E0", 0}, {"E23", -1}, {"E13", 0}},
                      Rational(0),
                      false};
    fx.alpha << 1, -1, -1, 0;
    fx.pullback_alpha = fx.matrix * fx.alpha;
    // (H - E0 + E23) . sigma for the generic line sigma inside E23
    const std::vector<std::string>& labels = fx.model.basis();
    for (Eigen::Index i = 0; i < 4; ++i)
        fx.pullback_dot_sigma += fx.pullback_alpha(i) * fx.sigma_table.at(labels[static_cast<size_t>(i)]);
    // a negative product against a movable curve rules the class out of the psef cone
    fx.pullback_leaves_psef = fx.pullback_dot_sigma < 0;
    return fx;
}

DiagonalFixture fixture_diagonal_blowup(int lambda) {
    if (lambda < 2) throw std::invalid_argument("diagonal fixture: lambda >= 2 required");
    BlowupModel model(2, {"H", "E"});
    QMatrix M(2, 2);
    M << lambda, 0, 0, lambda;
    return DiagonalFixture{std::move(model), std::move(M), Rational(-1), true, false};
}

}  // namespace noedyn
