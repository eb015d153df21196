#pragma once

#include "core.hpp"
#include "linalg.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace discokit {

/// One generalized disc: the image of the unit ball of R^n under a d x n basis
/// matrix with linearly independent columns. Always centered at the origin.
class Disc {
public:
    explicit Disc(MatrixXd basis) : basis_(std::move(basis)) {
        if (basis_.cols() < 1) throw InvalidInput("disc basis needs at least one column");
        if (basis_.cols() > basis_.rows())
            throw InvalidInput("disc basis has " + std::to_string(basis_.cols()) + " columns in ambient dimension " +
                               std::to_string(basis_.rows()));
        if (!basis_.allFinite()) throw InvalidInput("disc basis has non-finite entries");
        if (linalg::numeric_rank(basis_) < basis_.cols()) throw InvalidInput("disc basis columns are linearly dependent");
    }

    Index ambient_dim() const noexcept { return basis_.rows(); }
    Index dim() const noexcept { return basis_.cols(); }
    const MatrixXd& basis() const noexcept { return basis_; }

private:
    MatrixXd basis_;
};

/// Minkowski sum of an ordered list of discs sharing one ambient dimension.
class Discotope {
public:
    explicit Discotope(std::vector<Disc> discs) : discs_(std::move(discs)) {
        if (discs_.empty()) throw InvalidInput("discotope needs at least one disc");
        const Index d = discs_.front().ambient_dim();
        for (std::size_t j = 1; j < discs_.size(); ++j)
            if (discs_[j].ambient_dim() != d)
                throw InvalidInput("disc " + std::to_string(j + 1) + " has ambient dimension " +
                                   std::to_string(discs_[j].ambient_dim()) + ", expected " + std::to_string(d));
    }

    Index ambient_dim() const noexcept { return discs_.front().ambient_dim(); }
    std::size_t size() const noexcept { return discs_.size(); }
    const Disc& disc(std::size_t j) const { return discs_.at(j); }
    const std::vector<Disc>& discs() const noexcept { return discs_; }

    /// All bases side by side (d x sum n_j).
    MatrixXd concatenated_basis() const {
        Index cols = 0;
        for (const auto& D : discs_) cols += D.dim();
        MatrixXd all(ambient_dim(), cols);
        Index c = 0;
        for (const auto& D : discs_) {
            all.middleCols(c, D.dim()) = D.basis();
            c += D.dim();
        }
        return all;
    }

private:
    std::vector<Disc> discs_;
};

/// counts[m-1] = number of discs of dimension m, for m = 1..d.
struct TypeVector {
    std::vector<int> counts;

    int total() const {
        int n = 0;
        for (int c : counts) n += c;
        return n;
    }
    bool operator==(const TypeVector&) const = default;
};

/// A unit vector in R^d.
class Direction {
public:
    explicit Direction(VectorXd u) : u_(std::move(u)) {
        if (u_.size() == 0 || !u_.allFinite()) throw InvalidInput("direction must be a finite non-empty vector");
        if (std::abs(u_.norm() - 1.0) > tol::unit)
            throw InvalidInput("direction is not a unit vector (norm " + std::to_string(u_.norm()) + ")");
    }

    static Direction normalized(const VectorXd& v) {
        const double n = v.norm();
        if (!(n > 0.0) || !std::isfinite(n)) throw ZeroDirection("cannot normalize a zero direction");
        return Direction(v / n);
    }

    const VectorXd& vec() const noexcept { return u_; }
    Index size() const noexcept { return u_.size(); }
    Direction operator-() const { return Direction(-u_); }

private:
    VectorXd u_;
};

namespace detail {
inline void check_dim(Index expected, Index got) {
    if (expected != got)
        throw InvalidInput("dimension mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(got));
}
}  // namespace detail

/// h_D(u) = ||B^T u||.
inline double support_disc(const Disc& disc, const Direction& u) {
    detail::check_dim(disc.ambient_dim(), u.size());
    return (disc.basis().transpose() * u.vec()).norm();
}

/// Additive over the summands, accumulated left to right.
inline double support_discotope(const Discotope& dt, const Direction& u) {
    double h = 0.0;
    for (const auto& D : dt.discs()) h += support_disc(D, u);
    return h;
}

/// Support function extended positively homogeneously to arbitrary v.
inline double support_raw(const Discotope& dt, const VectorXd& v) {
    detail::check_dim(dt.ambient_dim(), v.size());
    double h = 0.0;
    for (const auto& D : dt.discs()) h += (D.basis().transpose() * v).norm();
    return h;
}

/// The unique maximizer of <u, .> over the disc: B B^T u / ||B^T u||.
inline VectorXd exposed_point_disc(const Disc& disc, const Direction& u) {
    detail::check_dim(disc.ambient_dim(), u.size());
    const VectorXd w = disc.basis().transpose() * u.vec();
    const double n = w.norm();
    if (n <= tol::degenerate) throw DegenerateDirection({0});
    return disc.basis() * (w / n);
}

/// grad h_D(u), the exposed point of the discotope. Requires u orthogonal to no disc.
inline VectorXd gradient_support(const Discotope& dt, const Direction& u) {
    detail::check_dim(dt.ambient_dim(), u.size());
    VectorXd p = VectorXd::Zero(dt.ambient_dim());
    std::vector<std::size_t> bad;
    for (std::size_t j = 0; j < dt.size(); ++j) {
        const auto& B = dt.disc(j).basis();
        const VectorXd w = B.transpose() * u.vec();
        const double n = w.norm();
        if (n <= tol::degenerate) {
            bad.push_back(j);
            continue;
        }
        p += B * (w / n);
    }
    if (!bad.empty()) throw DegenerateDirection(std::move(bad));
    return p;
}

inline TypeVector type_vector(const Discotope& dt) {
    TypeVector t{std::vector<int>(static_cast<std::size_t>(dt.ambient_dim()), 0)};
    for (const auto& D : dt.discs()) ++t.counts[static_cast<std::size_t>(D.dim() - 1)];
    return t;
}

/// The discs span R^d.
inline bool is_full_dimensional(const Discotope& dt) {
    return linalg::numeric_rank(dt.concatenated_basis()) == dt.ambient_dim();
}

/// sum_m (m - 1) N_m >= d - 1: the boundary part S is a hypersurface.
inline bool satisfies_nondegeneracy(const Discotope& dt) {
    long lhs = 0;
    for (const auto& D : dt.discs()) lhs += D.dim() - 1;
    return lhs >= dt.ambient_dim() - 1;
}

}  // namespace discokit
