#include "noedyn/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>

namespace noedyn {

Polynomial closed_form_charpoly(int d, int l, const std::vector<int>& N) {
    if (N.empty())
        throw UnsupportedConfiguration(
            "closed-form characteristic polynomial: no singular orbits (model is <H>)");
    const int k = static_cast<int>(N.size()) - 1;
    if (l < 0 || l > k + 1) throw std::invalid_argument("closed form: l out of range");
    for (int t = 0; t + 1 < static_cast<int>(N.size()); ++t)
        if (N[static_cast<size_t>(t)] > N[static_cast<size_t>(t + 1)])
            throw std::invalid_argument("closed form: N must be ascending");
    for (int t = 0; t < static_cast<int>(N.size()); ++t) {
        bool trivial = N[static_cast<size_t>(t)] == 1;
        if ((t < l) != trivial)
            throw std::invalid_argument("closed form: exactly the first l lengths must equal 1");
    }

    const Polynomial x = Polynomial::monomial(1);
    const Polynomial one = Polynomial::constant(Rational(1));
    const Polynomial x_minus_1 = x - one;

    // factors x^{N_j} - 1 for the nontrivial orbits j = l..k
    std::vector<Polynomial> factor;
    for (int j = l; j <= k; ++j)
        factor.push_back(Polynomial::monomial(N[static_cast<size_t>(j)]) - one);

    Polynomial prod_all = one;
    for (const auto& g : factor) prod_all = prod_all * g;
    Polynomial sum_terms = Polynomial::zero();
    for (size_t j = 0; j < factor.size(); ++j) {
        Polynomial term = one;
        for (size_t i = 0; i < factor.size(); ++i)
            if (i != j) term = term * factor[i];
        sum_terms = sum_terms + term;
    }

    Polynomial bracket =
        (x - Polynomial::constant(Rational(d - l))) * prod_all + x_minus_1 * sum_terms;
    Polynomial chi = bracket;
    for (int t = 0; t < l; ++t) chi = chi * x_minus_1;
    return chi;
}

SpectralData dynamical_degree(const QMatrix& M) {
    Polynomial chi = char_poly(M);
    AlgebraicNumber lam = largest_real_root(chi);
    const bool gt_one = lam.compare(Rational(1)) > 0;
    const bool simple = root_multiplicity(chi, lam) == 1;

    SturmSequence st(chi);
    const int above_one = st.count_above(Rational(1));
    const int below_minus_one = st.count_below(Rational(-1));
    const bool exact_unique =
        below_minus_one == 0 && above_one == (gt_one ? 1 : 0);

    // floating defensive layer over the full complex spectrum
    const Eigen::Index n = M.rows();
    Eigen::MatrixXd Md(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) Md(r, c) = M(r, c).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(Md, /*computeEigenvectors=*/false);
    const double lam_d = lam.to_double();
    bool numeric_ok = es.info() == Eigen::Success;
    if (numeric_ok) {
        for (Eigen::Index i = 0; i < n; ++i) {
            std::complex<double> mu = es.eigenvalues()(i);
            if (std::abs(mu) <= 1.0 + 1e-9) continue;
            if (gt_one && std::abs(mu - std::complex<double>(lam_d, 0.0)) < 1e-6) continue;
            numeric_ok = false;
        }
    }

    SpectralData sd{std::move(chi), std::move(lam), gt_one,
                    simple,         exact_unique,   numeric_ok,
                    gt_one && simple && exact_unique && numeric_ok,
                    "exact(real-line Sturm counts)+numeric(complex modulus, tol 1e-9)"};
    return sd;
}

bool lambda_within_bounds(SpectralData& sd, int d, int l) {
    return sd.lambda.compare(Rational(d - l - 1)) >= 0 && sd.lambda.compare(Rational(d)) <= 0;
}

InvariantClass invariant_class(const BlowupModel& model, const QMatrix& M,
                               const AlgebraicNumberPtr& lambda, bool full_solve) {
    const NFElement lam = NFElement::generator(lambda);
    const NFElement one{Rational(1)};

    std::map<int, int> length;  // orbit index -> N_i
    for (const auto& ctr : model.centers())
        length[ctr.i] = std::max(length[ctr.i], ctr.j);

    std::map<std::pair<int, int>, NFElement> c;
    for (const auto& [i, Ni] : length) {
        NFElement ci = (lam - one) / (lam.pow(Ni) - one);
        for (int j = 1; j <= Ni; ++j) {
            c[{i, j}] = ci;
            ci = lam * ci;
        }
    }

    NFVector v = NFVector::Constant(model.dim(), NFElement(Rational(0)));
    v(0) = one;
    for (const auto& ctr : model.centers()) v(model.slot(ctr.i, ctr.j)) = -c.at({ctr.i, ctr.j});
    if (model.has_F()) v(model.f_slot()) = -(one / lam);

    NFMatrix MN = to_nf(M, lambda);
    bool matches = true;
    if (full_solve) {
        NFMatrix A = MN;
        for (Eigen::Index i = 0; i < A.rows(); ++i) A(i, i) = A(i, i) - lam;
        auto ns = null_space(A, nfzero);
        if (ns.size() != 1)
            throw InternalContradiction("invariant class: eigenspace dimension " +
                                        std::to_string(ns.size()) + " (lambda not simple?)");
        NFVector w = ns.front();
        if (w(0).is_zero())
            throw InternalContradiction("invariant class: eigenvector has zero H coordinate");
        NFElement scale = one / w(0);
        for (Eigen::Index i = 0; i < w.size(); ++i)
            if (scale * w(i) != v(i)) matches = false;
    } else {
        NFVector Mv = MN * v;
        for (Eigen::Index i = 0; i < Mv.size(); ++i)
            if (Mv(i) != lam * v(i)) matches = false;
    }
    if (!matches)
        throw InternalContradiction(
            "invariant class: closed forms disagree with the eigenvector of M");

    bool positive = true, unit_sums = true;
    NFElement first_sum{Rational(0)};
    for (const auto& [i, Ni] : length) {
        NFElement orbit_sum{Rational(0)};
        for (int j = 1; j <= Ni; ++j) orbit_sum += c.at({i, j});
        if (orbit_sum != one) unit_sums = false;
        if (nf_sign(c.at({i, 1})) <= 0) positive = false;
        first_sum += c.at({i, 1});
    }
    bool sum_first = first_sum == NFElement(Rational(model.d())) - lam;

    return InvariantClass{DivisorClass(model, std::move(v)), std::move(c),
                          matches,  sum_first, unit_sums, positive};
}

}  // namespace noedyn
