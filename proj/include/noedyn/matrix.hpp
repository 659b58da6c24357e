#pragma once

#include "noedyn/nfelement.hpp"
#include "noedyn/polynomial.hpp"
#include "noedyn/rational.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<noedyn::NFElement> : GenericNumTraits<noedyn::NFElement> {
    using Real = noedyn::NFElement;
    using NonInteger = noedyn::NFElement;
    using Nested = noedyn::NFElement;
    using Literal = long;

    static inline Real epsilon() { return noedyn::NFElement(); }
    static inline Real dummy_precision() { return noedyn::NFElement(); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 400,
        MulCost = 400
    };
};

}  // namespace Eigen

namespace noedyn {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using NFMatrix = Eigen::Matrix<NFElement, Eigen::Dynamic, Eigen::Dynamic>;
using NFVector = Eigen::Matrix<NFElement, Eigen::Dynamic, 1>;

/// Characteristic polynomial det(xI - M), monic, exact over Q
/// (Faddeev-LeVerrier: division-controlled, integer divisors only).
Polynomial char_poly(const QMatrix& M);

QMatrix identity_q(Eigen::Index n);

/// Exact Gaussian elimination over an arbitrary field scalar. `is_zero`
/// decides pivot viability; for Q(lambda) scalars this is an exact sign test.
template <typename Mat, typename IsZero>
int row_echelon(Mat& A, std::vector<int>& pivot_cols, IsZero is_zero) {
    using Scalar = typename Mat::Scalar;
    const Eigen::Index rows = A.rows(), cols = A.cols();
    pivot_cols.clear();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!is_zero(A(i, c))) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) A.row(piv).swap(A.row(r));
        Scalar inv_p = Scalar(Rational(1)) / A(r, c);
        for (Eigen::Index j = c; j < cols; ++j) A(r, j) = A(r, j) * inv_p;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(A(i, c))) continue;
            Scalar f = A(i, c);
            for (Eigen::Index j = c; j < cols; ++j) A(i, j) = A(i, j) - f * A(r, j);
        }
        pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    return static_cast<int>(r);
}

template <typename Mat, typename IsZero>
int rank_of(Mat A, IsZero is_zero) {
    std::vector<int> piv;
    return row_echelon(A, piv, is_zero);
}

/// Basis of the right null space (one vector per free column, free columns
/// in increasing index order).
template <typename Mat, typename IsZero>
std::vector<Eigen::Matrix<typename Mat::Scalar, Eigen::Dynamic, 1>> null_space(Mat A,
                                                                               IsZero is_zero) {
    using Scalar = typename Mat::Scalar;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index cols = A.cols();
    std::vector<int> piv;
    int rank = row_echelon(A, piv, is_zero);
    std::vector<Vec> basis;
    size_t pi = 0;
    for (Eigen::Index c = 0; c < cols; ++c) {
        if (pi < piv.size() && piv[pi] == c) {
            ++pi;
            continue;
        }
        Vec v = Vec::Constant(cols, Scalar(Rational(0)));
        v(c) = Scalar(Rational(1));
        for (int r = 0; r < rank; ++r) v(piv[static_cast<size_t>(r)]) = -A(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline bool qzero(const Rational& r) { return r == 0; }
inline bool nfzero(const NFElement& e) { return e.sign() == 0; }

NFMatrix to_nf(const QMatrix& M, const AlgebraicNumberPtr& base);

}  // namespace noedyn
