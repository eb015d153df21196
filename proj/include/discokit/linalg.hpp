#pragma once

#include "core.hpp"

#include <Eigen/SVD>

namespace discokit::linalg {

inline VectorXd singular_values(const MatrixXd& m) {
    if (m.size() == 0) return VectorXd();
    return Eigen::JacobiSVD<MatrixXd>(m).singularValues();
}

/// Number of singular values above rel_tol times the largest one.
inline Index numeric_rank(const MatrixXd& m, double rel_tol = tol::rank) {
    const VectorXd s = singular_values(m);
    if (s.size() == 0 || s(0) == 0.0) return 0;
    Index r = 0;
    for (Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0)) ++r;
    return r;
}

/// Orthonormal basis (as columns) of the orthogonal complement of v in R^n.
inline MatrixXd orthogonal_complement(const VectorXd& v) {
    const Index n = v.size();
    if (n <= 1) return MatrixXd(n, 0);
    Eigen::HouseholderQR<MatrixXd> qr(v);
    MatrixXd q = qr.householderQ() * MatrixXd::Identity(n, n);
    return q.rightCols(n - 1);
}

/// Smallest over largest singular value; 0 for an empty or zero matrix.
inline double smallest_singular_ratio(const MatrixXd& m) {
    const VectorXd s = singular_values(m);
    if (s.size() == 0 || s(0) == 0.0) return 0.0;
    return s(s.size() - 1) / s(0);
}

}  // namespace discokit::linalg
