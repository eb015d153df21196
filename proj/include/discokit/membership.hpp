#pragma once

#include "geometry.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

namespace discokit {

/// Minimizer of <c, .> over the discotope. Discs orthogonal to c contribute the origin.
inline VectorXd lmo(const Discotope& dt, const VectorXd& c) {
    detail::check_dim(dt.ambient_dim(), c.size());
    const double n = c.norm();
    if (!(n >= 1e-14)) throw ZeroDirection("linear minimization needs a nonzero objective");
    VectorXd v = VectorXd::Zero(dt.ambient_dim());
    for (const auto& D : dt.discs()) {
        const VectorXd w = D.basis().transpose() * (c / n);
        const double wn = w.norm();
        if (wn > tol::degenerate) v -= D.basis() * (w / wn);
    }
    return v;
}

struct InsideWitness {
    /// x = sum weights[k] * vertices[k] approximates the point.
    std::vector<double> weights;
    std::vector<VectorXd> vertices;
};

struct SeparatingDirection {
    VectorXd u;
    /// <u, p> - h(u), strictly above margin_tol.
    double violation = 0.0;
};

struct MembershipReport {
    VectorXd point;
    VectorXd nearest;
    double distance_estimate = 0.0;
    std::variant<InsideWitness, SeparatingDirection> certificate;
    std::size_t iterations = 0;
    double final_gap = 0.0;
    /// Duality gaps at checkpoints (every iteration's best-so-far value).
    std::vector<double> gap_history;

    bool inside() const { return std::holds_alternative<InsideWitness>(certificate); }
};

class NotConverged : public Error {
public:
    explicit NotConverged(MembershipReport last)
        : Error("Frank-Wolfe stalled: gap " + std::to_string(last.final_gap) + " after " +
                std::to_string(last.iterations) + " iterations"),
          last_(std::move(last)) {}
    const MembershipReport& last() const noexcept { return last_; }

private:
    MembershipReport last_;
};

struct ProjectOptions {
    double tol = 1e-6;
    std::size_t max_iter = 50000;
    /// Distance below which the point counts as inside; unset means 10 * tol.
    std::optional<double> inside_tol;
    double margin_tol = 1e-8;
    /// Convex weights are tracked for at most this many distinct vertices.
    std::size_t max_tracked_vertices = 100000;
};

/// Frank-Wolfe minimization of 0.5 ||x - p||^2 over the discotope with exact line search.
inline MembershipReport project(const Discotope& dt, const VectorXd& p, const ProjectOptions& opt = {}) {
    detail::check_dim(dt.ambient_dim(), p.size());
    if (!(opt.tol > 0.0)) throw InvalidInput("tolerance must be positive");
    if (!p.allFinite()) throw InvalidInput("point has non-finite coordinates");

    MembershipReport rep;
    rep.point = p;
    InsideWitness witness;
    const double pn = p.norm();

    if (pn == 0.0) {
        // Midpoint of two opposite vertices.
        const VectorXd e = VectorXd::Unit(dt.ambient_dim(), 0);
        const VectorXd v = lmo(dt, e);
        witness = {{0.5, 0.5}, {v, -v}};
        rep.nearest = VectorXd::Zero(dt.ambient_dim());
        rep.certificate = witness;
        return rep;
    }

    VectorXd x = lmo(dt, -p);
    witness = {{1.0}, {x}};
    bool tracking = true;
    double scale = 1.0;
    double best_gap = std::numeric_limits<double>::infinity();
    const double gap_target = opt.tol * opt.tol;
    const double inside_tol = opt.inside_tol.value_or(10.0 * opt.tol);

    std::size_t k = 0;
    for (; k < opt.max_iter; ++k) {
        const VectorXd g = x - p;
        const double dist = g.norm();
        if (dist <= inside_tol) break;
        const VectorXd v = lmo(dt, g);
        const VectorXd dir = v - x;
        const double gap = -g.dot(dir);
        best_gap = std::min(best_gap, std::max(gap, 0.0));
        rep.gap_history.push_back(best_gap);
        rep.final_gap = gap;
        if (gap <= gap_target) break;
        const double dd = dir.squaredNorm();
        if (dd == 0.0) break;
        const double gamma = std::clamp(gap / dd, 0.0, 1.0);
        x += gamma * dir;
        if (tracking) {
            // Stored weights are true weights divided by `scale`.
            scale *= 1.0 - gamma;
            if (scale < 1e-200) {
                for (double& w : witness.weights) w *= scale;
                scale = 1.0;
            }
            witness.weights.push_back(gamma / scale);
            witness.vertices.push_back(v);
            if (witness.vertices.size() > opt.max_tracked_vertices) tracking = false;
        }
    }
    for (double& w : witness.weights) w *= scale;
    rep.iterations = k;
    rep.nearest = x;
    rep.distance_estimate = (x - p).norm();

    if (rep.distance_estimate <= inside_tol) {
        if (!tracking) witness = {{1.0}, {x}};
        rep.certificate = std::move(witness);
        return rep;
    }
    const VectorXd u = (p - x) / rep.distance_estimate;
    const double violation = u.dot(p) - support_raw(dt, u);
    if (violation > opt.margin_tol) {
        rep.certificate = SeparatingDirection{u, violation};
        return rep;
    }
    rep.certificate = InsideWitness{};
    throw NotConverged(std::move(rep));
}

}  // namespace discokit
