#pragma once

#include "geometry.hpp"
#include "linalg.hpp"

#include <span>
#include <vector>

namespace discokit {

/// Face exposed by a direction: the Minkowski sum of the discs in flat_indices,
/// translated by point_part (the sum of the exposed points of the other discs).
struct FaceDescription {
    std::vector<std::size_t> flat_indices;
    VectorXd point_part;
    Index face_dim = 0;

    bool is_point() const noexcept { return flat_indices.empty(); }
};

inline FaceDescription face_of_direction(const Discotope& dt, const Direction& u) {
    detail::check_dim(dt.ambient_dim(), u.size());
    FaceDescription face;
    face.point_part = VectorXd::Zero(dt.ambient_dim());
    Index flat_cols = 0;
    for (std::size_t j = 0; j < dt.size(); ++j) {
        const auto& B = dt.disc(j).basis();
        const VectorXd w = B.transpose() * u.vec();
        const double n = w.norm();
        if (n <= tol::degenerate) {
            face.flat_indices.push_back(j);
            flat_cols += B.cols();
        } else {
            face.point_part += B * (w / n);
        }
    }
    if (flat_cols > 0) {
        MatrixXd flat(dt.ambient_dim(), flat_cols);
        Index c = 0;
        for (auto j : face.flat_indices) {
            const auto& B = dt.disc(j).basis();
            flat.middleCols(c, B.cols()) = B;
            c += B.cols();
        }
        face.face_dim = linalg::numeric_rank(flat);
    }
    return face;
}

namespace detail {
/// Coordinates w with B w = xi; throws unless xi lies on the boundary sphere of the disc.
inline VectorXd boundary_preimage(const Disc& disc, const VectorXd& xi, std::size_t index) {
    check_dim(disc.ambient_dim(), xi.size());
    const auto& B = disc.basis();
    const VectorXd w = B.colPivHouseholderQr().solve(xi);
    const double off_span = (B * w - xi).norm();
    if (off_span > tol::boundary * std::max(1.0, xi.norm()))
        throw InvalidBoundaryPoint("point " + std::to_string(index + 1) + " is not in the span of its disc");
    if (std::abs(w.norm() - 1.0) > tol::boundary)
        throw InvalidBoundaryPoint("point " + std::to_string(index + 1) + " has preimage norm " +
                                   std::to_string(w.norm()) + ", not on the disc boundary");
    return w;
}
}  // namespace detail

/// True iff every tangent space T_{xi_i} dD_i lies in u^perp. The tangent space at
/// xi_i = B_i w is spanned by B_i v for v orthogonal to w.
inline bool tangent_containment_check(const Discotope& dt, const Direction& u, std::span<const VectorXd> xi) {
    if (xi.size() != dt.size())
        throw InvalidInput("expected " + std::to_string(dt.size()) + " boundary points, got " + std::to_string(xi.size()));
    bool contained = true;
    for (std::size_t i = 0; i < dt.size(); ++i) {
        const auto& B = dt.disc(i).basis();
        const VectorXd w = detail::boundary_preimage(dt.disc(i), xi[i], i);
        const MatrixXd tangents = B * linalg::orthogonal_complement(w);
        for (Index k = 0; k < tangents.cols(); ++k) {
            const VectorXd t = tangents.col(k).normalized();
            if (std::abs(t.dot(u.vec())) > tol::tangency) contained = false;
        }
    }
    return contained;
}

/// Whether the exposed point of u is also exposed by other directions:
/// dim((H n L_1) + ... + (H n L_N)) <= d - 2 with H = u^perp.
inline bool multi_exposure_test(const Discotope& dt, const Direction& u) {
    detail::check_dim(dt.ambient_dim(), u.size());
    std::vector<std::size_t> bad;
    std::vector<MatrixXd> pieces;
    Index cols = 0;
    for (std::size_t j = 0; j < dt.size(); ++j) {
        const auto& B = dt.disc(j).basis();
        const VectorXd w = B.transpose() * u.vec();
        if (w.norm() <= tol::degenerate) {
            bad.push_back(j);
            continue;
        }
        pieces.push_back(B * linalg::orthogonal_complement(w));
        cols += pieces.back().cols();
    }
    if (!bad.empty()) throw DegenerateDirection(std::move(bad));
    if (cols == 0) return dt.ambient_dim() >= 2;
    MatrixXd all(dt.ambient_dim(), cols);
    Index c = 0;
    for (const auto& p : pieces) {
        all.middleCols(c, p.cols()) = p;
        c += p.cols();
    }
    return linalg::numeric_rank(all) <= dt.ambient_dim() - 2;
}

}  // namespace discokit
