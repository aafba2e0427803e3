#pragma once

#include <Eigen/Core>

#include <boost/multiprecision/cpp_int.hpp>

namespace reeder {

using Int = boost::multiprecision::cpp_int;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Element-wise widening; Eigen's .cast<Int>() expression templates trip over
// cpp_int's container-constructor SFINAE, so spell the loop out.
inline IntMatrix to_int_matrix(const Eigen::MatrixXi& m) {
    IntMatrix out(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out(r, c) = Int(m(r, c));
    return out;
}

// Plain matrix product.  Eigen's operator* is unusable here for the same
// reason as .cast<Int>(): overload resolution feeds the matrix type into
// cpp_int's container constructor and dies outside the immediate context.
inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), b.cols());
    out.setZero();
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (a(r, k) == 0) continue;
            for (Eigen::Index c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

// Exact determinant by fraction-free (Bareiss) elimination.
// Every intermediate division is exact, so any integer scalar works.
template <typename Mat>
typename Mat::Scalar det_bareiss(Mat m) {
    using S = typename Mat::Scalar;
    const Eigen::Index n = m.rows();
    if (n != m.cols())
        return S(0);
    if (n == 0)
        return S(1);
    S sign(1), prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k) == S(0)) {
            Eigen::Index p = k + 1;
            while (p < n && m(p, k) == S(0))
                ++p;
            if (p == n)
                return S(0);
            m.row(k).swap(m.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

} // namespace reeder
