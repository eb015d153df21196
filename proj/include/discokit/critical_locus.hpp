#pragma once

#include "geometry.hpp"
#include "linalg.hpp"
#include "random.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace discokit {

/// One angle per two-dimensional disc; disc j's boundary point is b1 cos(theta) + b2 sin(theta).
struct AngleConfig {
    std::vector<double> theta;

    static double wrap(double a) {
        a = std::fmod(a, 2.0 * std::numbers::pi);
        if (a < 0) a += 2.0 * std::numbers::pi;
        return a;
    }
};

/// Signs +-1 per disc selecting a real sheet of the critical locus.
struct SignPattern {
    std::vector<int> sigma;

    bool operator==(const SignPattern&) const = default;
    SignPattern operator-() const {
        SignPattern s = *this;
        for (int& v : s.sigma) v = -v;
        return s;
    }
};

/// The 2^{N-1} sign patterns with sigma_1 = +1; pattern k flips disc j+1 when bit j of k is set.
/// Pattern 0 is all-plus (the boundary sheet).
inline std::vector<SignPattern> enumerate_sheets(std::size_t n_discs) {
    if (n_discs == 0) return {};
    if (n_discs > 30) throw InvalidInput("too many discs to enumerate sign sheets");
    const std::size_t count = std::size_t{1} << (n_discs - 1);
    std::vector<SignPattern> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        SignPattern s{std::vector<int>(n_discs, 1)};
        for (std::size_t j = 0; j + 1 < n_discs; ++j)
            if ((k >> j) & 1u) s.sigma[j + 1] = -1;
        out.push_back(std::move(s));
    }
    return out;
}

inline void require_two_discs(const Discotope& dt) {
    for (std::size_t j = 0; j < dt.size(); ++j)
        if (dt.disc(j).dim() != 2)
            throw NotTwoDiscs("disc " + std::to_string(j + 1) + " has dimension " + std::to_string(dt.disc(j).dim()));
}

/// N x d matrix whose row j is the tangent b2 cos(theta_j) - b1 sin(theta_j) of disc j.
inline MatrixXd build_M(const Discotope& dt, const AngleConfig& cfg) {
    require_two_discs(dt);
    if (cfg.theta.size() != dt.size())
        throw InvalidInput("expected " + std::to_string(dt.size()) + " angles, got " + std::to_string(cfg.theta.size()));
    MatrixXd m(static_cast<Index>(dt.size()), dt.ambient_dim());
    for (std::size_t j = 0; j < dt.size(); ++j) {
        const auto& B = dt.disc(j).basis();
        m.row(static_cast<Index>(j)) =
            (B.col(1) * std::cos(cfg.theta[j]) - B.col(0) * std::sin(cfg.theta[j])).transpose();
    }
    return m;
}

/// d minus the numeric rank of m (d = number of columns).
inline Index rank_defect(const MatrixXd& m) { return m.cols() - linalg::numeric_rank(m); }

/// sigma_d(M) / sigma_1(M): zero exactly when all d x d minors vanish.
inline double minor_ratio(const MatrixXd& m) {
    if (m.rows() < m.cols()) return 0.0;
    return linalg::smallest_singular_ratio(m);
}

template <SampleScalar Scalar>
struct SamplePoint {
    VectorX<Scalar> x;
    /// Direction the point was generated from (empty for join samples).
    VectorX<Scalar> direction;
    std::vector<int> signs;
    std::size_t sheet = 0;
    /// Unsigned per-disc points; x = sum_j signs[j] * contributions[j].
    std::vector<VectorX<Scalar>> contributions;
};

template <SampleScalar Scalar>
struct SampleCloud {
    Index dim = 0;
    std::vector<SamplePoint<Scalar>> points;

    std::size_t size() const noexcept { return points.size(); }
    bool empty() const noexcept { return points.empty(); }

    /// Points as rows.
    MatrixX<Scalar> matrix() const {
        MatrixX<Scalar> m(static_cast<Index>(points.size()), dim);
        for (std::size_t i = 0; i < points.size(); ++i) m.row(static_cast<Index>(i)) = points[i].x.transpose();
        return m;
    }
};

using RealCloud = SampleCloud<double>;
using ComplexCloud = SampleCloud<Complex>;

enum class Sheets { boundary, all, all_mirrored };

namespace detail {

/// Complex directions with |w^T w| below this fraction of ||w||^2 are rejected:
/// the square root in the exposed-point map is then close to its branch point.
inline constexpr double isotropy_tol = 1e-6;

template <SampleScalar Scalar>
bool disc_points(const Discotope& dt, const VectorX<Scalar>& u, std::vector<VectorX<Scalar>>& out,
                 std::vector<std::size_t>* bad = nullptr) {
    out.resize(dt.size());
    bool ok = true;
    for (std::size_t j = 0; j < dt.size(); ++j) {
        const MatrixX<Scalar> B = dt.disc(j).basis().template cast<Scalar>();
        const VectorX<Scalar> w = B.transpose() * u;
        if constexpr (is_complex_v<Scalar>) {
            const Complex q = (w.transpose() * w)(0);
            if (std::abs(q) <= isotropy_tol * w.squaredNorm()) {
                ok = false;
                if (bad) bad->push_back(j);
                continue;
            }
            out[j] = B * (w / std::sqrt(q));
        } else {
            const double n = w.norm();
            if (n <= tol::degenerate) {
                ok = false;
                if (bad) bad->push_back(j);
                continue;
            }
            out[j] = B * (w / n);
        }
    }
    return ok;
}

template <SampleScalar Scalar>
VectorX<Scalar> signed_sum(const std::vector<VectorX<Scalar>>& xi, const std::vector<int>& sigma) {
    VectorX<Scalar> p = VectorX<Scalar>::Zero(xi.front().size());
    for (std::size_t j = 0; j < xi.size(); ++j) p += static_cast<double>(sigma[j]) * xi[j];
    return p;
}

template <SampleScalar Scalar>
VectorX<Scalar> random_direction(std::mt19937_64& gen, Index d) {
    if constexpr (is_complex_v<Scalar>) {
        VectorXd re = gaussian_vector(gen, d);
        VectorXd im = gaussian_vector(gen, d);
        VectorX<Complex> u(d);
        for (Index i = 0; i < d; ++i) u(i) = Complex(re(i), im(i));
        return u / u.norm();
    } else {
        return random_unit_vector(gen, d);
    }
}

inline void check_sigma(const Discotope& dt, const SignPattern& s) {
    if (s.sigma.size() != dt.size())
        throw InvalidInput("sign pattern has " + std::to_string(s.sigma.size()) + " entries for " +
                           std::to_string(dt.size()) + " discs");
    for (int v : s.sigma)
        if (v != 1 && v != -1) throw InvalidInput("sign pattern entries must be +1 or -1");
}

}  // namespace detail

/// sum_j sigma_j xi_j(u): a point of the critical image, since every tangent
/// space at +-xi_j(u) lies in u^perp. All-plus gives the exposed point.
inline VectorXd sample_critical_point(const Discotope& dt, const Direction& u, const SignPattern& sigma) {
    detail::check_dim(dt.ambient_dim(), u.size());
    detail::check_sigma(dt, sigma);
    std::vector<VectorXd> xi;
    std::vector<std::size_t> bad;
    if (!detail::disc_points<double>(dt, u.vec(), xi, &bad)) throw DegenerateDirection(std::move(bad));
    return detail::signed_sum(xi, sigma.sigma);
}

/// Complexified version: u is any complex vector with u^T B_j B_j^T u away from zero.
inline VectorX<Complex> sample_critical_point(const Discotope& dt, const VectorX<Complex>& u, const SignPattern& sigma) {
    detail::check_dim(dt.ambient_dim(), u.size());
    detail::check_sigma(dt, sigma);
    std::vector<VectorX<Complex>> xi;
    std::vector<std::size_t> bad;
    if (!detail::disc_points<Complex>(dt, u, xi, &bad)) throw DegenerateDirection(std::move(bad));
    return detail::signed_sum(xi, sigma.sigma);
}

inline constexpr int max_resample = 100;

/// Samples the purely nonlinear part S: `count` directions, each contributing one
/// point per requested sheet. Real clouds draw unit Gaussian directions; complex
/// clouds draw complex Gaussian directions (points of the complexified S).
/// Deterministic in seed; each direction uses its own counter-based stream.
template <SampleScalar Scalar = double>
SampleCloud<Scalar> sample_S(const Discotope& dt, std::size_t count, std::uint64_t seed, Sheets sheets = Sheets::all) {
    if (!satisfies_nondegeneracy(dt))
        throw ConditionViolated("sum (m-1) N_m < d-1: S is not a hypersurface; use join sampling");
    std::vector<SignPattern> patterns;
    if (sheets == Sheets::boundary) {
        patterns.push_back(SignPattern{std::vector<int>(dt.size(), 1)});
    } else {
        patterns = enumerate_sheets(dt.size());
        if (sheets == Sheets::all_mirrored) {
            const std::size_t half = patterns.size();
            for (std::size_t k = 0; k < half; ++k) patterns.push_back(-patterns[k]);
        }
    }
    const Index d = dt.ambient_dim();
    SampleCloud<Scalar> cloud;
    cloud.dim = d;
    cloud.points.resize(count * patterns.size());
    parallel_for(count, [&](std::size_t i) {
        auto gen = point_stream(seed, i);
        std::vector<VectorX<Scalar>> xi;
        VectorX<Scalar> u;
        int attempt = 0;
        for (;; ++attempt) {
            if (attempt > max_resample)
                throw SamplingExhausted("no admissible direction after " + std::to_string(max_resample) + " retries");
            u = detail::random_direction<Scalar>(gen, d);
            if (detail::disc_points<Scalar>(dt, u, xi)) break;
        }
        for (std::size_t k = 0; k < patterns.size(); ++k) {
            auto& pt = cloud.points[i * patterns.size() + k];
            pt.x = detail::signed_sum(xi, patterns[k].sigma);
            pt.direction = u;
            pt.signs = patterns[k].sigma;
            pt.sheet = k;
            pt.contributions = xi;
        }
    });
    return cloud;
}

/// sum_m (m-1) N_m <= d-1, the range where S is the closure of the sum of the disc boundaries.
inline bool satisfies_join_condition(const Discotope& dt) {
    long lhs = 0;
    for (const auto& D : dt.discs()) lhs += D.dim() - 1;
    return lhs <= dt.ambient_dim() - 1;
}

/// Sums of independent uniform boundary points, one per disc.
inline RealCloud sample_join(const Discotope& dt, std::size_t count, std::uint64_t seed) {
    if (!satisfies_join_condition(dt)) throw ConditionViolated("sum (m-1) N_m > d-1: join sampling does not apply");
    RealCloud cloud;
    cloud.dim = dt.ambient_dim();
    cloud.points.resize(count);
    parallel_for(count, [&](std::size_t i) {
        auto gen = point_stream(seed, i);
        auto& pt = cloud.points[i];
        pt.signs.assign(dt.size(), 1);
        pt.contributions.resize(dt.size());
        pt.x = VectorXd::Zero(dt.ambient_dim());
        for (std::size_t j = 0; j < dt.size(); ++j) {
            const auto& B = dt.disc(j).basis();
            pt.contributions[j] = B * random_unit_vector(gen, B.cols());
            pt.x += pt.contributions[j];
        }
    });
    return cloud;
}

/// Angles of boundary points on two-dimensional discs: xi_j = b1 cos(theta_j) + b2 sin(theta_j).
inline AngleConfig angles_of(const Discotope& dt, const std::vector<VectorXd>& xi) {
    require_two_discs(dt);
    if (xi.size() != dt.size()) throw InvalidInput("one boundary point per disc required");
    AngleConfig cfg;
    for (std::size_t j = 0; j < dt.size(); ++j) {
        const VectorXd w = dt.disc(j).basis().colPivHouseholderQr().solve(xi[j]);
        cfg.theta.push_back(AngleConfig::wrap(std::atan2(w(1), w(0))));
    }
    return cfg;
}

/// Angles of the signed points sigma_j xi_j of a sample.
inline AngleConfig angles_of(const Discotope& dt, const SamplePoint<double>& pt) {
    std::vector<VectorXd> signed_xi;
    for (std::size_t j = 0; j < pt.contributions.size(); ++j)
        signed_xi.push_back(static_cast<double>(pt.signs[j]) * pt.contributions[j]);
    return angles_of(dt, signed_xi);
}

}  // namespace discokit
