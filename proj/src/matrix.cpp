#include "noedyn/matrix.hpp"

namespace noedyn {

QMatrix identity_q(Eigen::Index n) {
    QMatrix I = QMatrix::Constant(n, n, Rational(0));
    for (Eigen::Index i = 0; i < n; ++i) I(i, i) = Rational(1);
    return I;
}

Polynomial char_poly(const QMatrix& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("char_poly: matrix is not square");
    const Eigen::Index n = M.rows();
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
    coeffs[static_cast<size_t>(n)] = 1;
    // Faddeev-LeVerrier: exact over Q, divisions by integers only
    QMatrix N = identity_q(n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        QMatrix Mk = M * N;
        Rational tr(0);
        for (Eigen::Index i = 0; i < n; ++i) tr += Mk(i, i);
        Rational ck = -tr / Rational(static_cast<long>(k));
        coeffs[static_cast<size_t>(n - k)] = ck;
        if (k < n) {
            N = Mk;
            for (Eigen::Index i = 0; i < n; ++i) N(i, i) += ck;
        }
    }
    return Polynomial(std::move(coeffs));
}

NFMatrix to_nf(const QMatrix& M, const AlgebraicNumberPtr& base) {
    NFMatrix R(M.rows(), M.cols());
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            R(i, j) = NFElement(base, Polynomial::constant(M(i, j)));
    return R;
}

}  // namespace noedyn
