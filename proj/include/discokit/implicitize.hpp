#pragma once

#include "critical_locus.hpp"
#include "polynomial.hpp"
#include "random.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <optional>
#include <variant>

namespace discokit {

struct FitOptions {
    double svd_tol = 1e-8;
    /// Next-smallest singular value must exceed this multiple of the accepted one.
    double separation = 100.0;
    /// Minimum points per basis monomial.
    double min_oversampling = 3.0;
    int equilibration_rounds = 3;
};

struct NoEquation {
    double smallest_ratio = 0.0;
};

struct AmbiguousNullspace {
    std::size_t null_dim = 0;
    double smallest_ratio = 0.0;
    double next_ratio = 0.0;
};

using FitResult = std::variant<ImplicitPolynomial, NoEquation, AmbiguousNullspace>;

inline bool fitted(const FitResult& r) { return std::holds_alternative<ImplicitPolynomial>(r); }

namespace detail {

template <SampleScalar S>
VectorXd coordinate_rms(const std::vector<VectorX<S>>& pts, Index d) {
    VectorXd s = VectorXd::Zero(d);
    for (const auto& p : pts)
        for (Index i = 0; i < d; ++i) s(i) += std::norm(p(i));
    for (Index i = 0; i < d; ++i) {
        s(i) = std::sqrt(s(i) / static_cast<double>(pts.size()));
        if (!(s(i) > 0.0) || !std::isfinite(s(i))) s(i) = 1.0;
    }
    return s;
}

/// Evaluation matrix with rows scaled to unit norm. Complex points contribute a
/// real and an imaginary row each.
template <SampleScalar S>
MatrixXd evaluation_matrix(const std::vector<VectorX<S>>& pts, const MonomialBasis& basis, const VectorXd& scale) {
    constexpr Index per = is_complex_v<S> ? 2 : 1;
    const Index d = basis.dim;
    const auto m = static_cast<Index>(basis.size());
    MatrixXd a(static_cast<Index>(pts.size()) * per, m);
    parallel_for(pts.size(), [&](std::size_t i) {
        VectorX<S> q(d);
        double qmax = 1.0;
        for (Index k = 0; k < d; ++k) {
            q(k) = pts[i](k) / scale(k);
            qmax = std::max(qmax, std::abs(q(k)));
        }
        // Dividing every entry by qmax^D keeps high powers bounded.
        std::vector<std::vector<S>> pw(static_cast<std::size_t>(d), std::vector<S>(static_cast<std::size_t>(basis.degree) + 1));
        for (Index k = 0; k < d; ++k) {
            auto& row = pw[static_cast<std::size_t>(k)];
            row[0] = S(1.0);
            for (int e = 1; e <= basis.degree; ++e) row[static_cast<std::size_t>(e)] = row[static_cast<std::size_t>(e - 1)] * (q(k) / qmax);
        }
        VectorX<S> r(m);
        for (Index c = 0; c < m; ++c) {
            const auto& e = basis.exponents[static_cast<std::size_t>(c)];
            S v = monomial_value(pw, e);
            v *= std::pow(1.0 / qmax, basis.degree - total_degree(e));
            r(c) = v;
        }
        const double n = r.norm();
        if (n > 0.0) r /= n;
        const auto row = static_cast<Index>(i) * per;
        if constexpr (is_complex_v<S>) {
            a.row(row) = r.real().transpose();
            a.row(row + 1) = r.imag().transpose();
        } else {
            a.row(row) = r.transpose();
        }
    });
    return a;
}

}  // namespace detail

/// Fits a single polynomial equation of degree <= `degree` through the cloud
/// via the nullspace of the monomial evaluation matrix.
template <SampleScalar S>
FitResult fit_implicit(const SampleCloud<S>& cloud, int degree, Parity parity, const FitOptions& opt = {}) {
    const MonomialBasis basis = monomial_basis(static_cast<int>(cloud.dim), degree, parity);
    const std::size_t need = static_cast<std::size_t>(std::ceil(opt.min_oversampling * static_cast<double>(basis.size())));
    if (cloud.size() < need) throw InsufficientSamples(cloud.size(), need);

    std::vector<VectorX<S>> pts;
    pts.reserve(cloud.size());
    for (const auto& p : cloud.points) {
        if (p.x.size() != cloud.dim) throw InvalidInput("cloud point has the wrong dimension");
        pts.push_back(p.x);
    }
    const VectorXd scale = detail::coordinate_rms(pts, cloud.dim);
    MatrixXd a = detail::evaluation_matrix(pts, basis, scale);

    VectorXd col_scale = VectorXd::Ones(a.cols());
    for (int round = 0; round < opt.equilibration_rounds; ++round) {
        for (Index c = 0; c < a.cols(); ++c) {
            const double n = a.col(c).norm();
            if (n > 0.0) {
                a.col(c) /= n;
                col_scale(c) /= n;
            }
        }
        for (Index r = 0; r < a.rows(); ++r) {
            const double n = a.row(r).norm();
            if (n > 0.0) a.row(r) /= n;
        }
    }

    Eigen::HouseholderQR<MatrixXd> qr(a);
    const MatrixXd r = qr.matrixQR().topRows(a.cols()).template triangularView<Eigen::Upper>();
    Eigen::BDCSVD<MatrixXd> svd(r, Eigen::ComputeFullV);
    const VectorXd sv = svd.singularValues();
    const Index m = sv.size();
    if (m == 0 || sv(0) == 0.0) return AmbiguousNullspace{static_cast<std::size_t>(m), 0.0, 0.0};

    std::size_t null_dim = 0;
    for (Index i = 0; i < m; ++i)
        if (sv(i) <= opt.svd_tol * sv(0)) ++null_dim;
    const double smallest = sv(m - 1) / sv(0);
    const double next = m >= 2 ? sv(m - 2) / sv(0) : 1.0;
    if (null_dim == 0) return NoEquation{smallest};
    if (null_dim >= 2 || next < opt.separation * smallest) return AmbiguousNullspace{null_dim, smallest, next};

    const VectorXd y = svd.matrixV().col(m - 1);
    ImplicitPolynomial p;
    p.dim = static_cast<int>(cloud.dim);
    p.parity = parity;
    p.fit_residual = smallest;
    p.scale = scale;
    for (Index c = 0; c < m; ++c) {
        const auto& e = basis.exponents[static_cast<std::size_t>(c)];
        double coef = y(c) * col_scale(c);
        for (std::size_t k = 0; k < e.size(); ++k) coef /= std::pow(scale(static_cast<Index>(k)), e[k]);
        p.terms.emplace(e, coef);
    }
    p.normalize();
    return p;
}

struct DegreeSearch {
    std::optional<int> degree;
    std::optional<ImplicitPolynomial> polynomial;
    /// Degrees tried with their outcome (only degrees that enlarge the basis).
    std::vector<std::pair<int, FitResult>> trace;
};

/// Smallest degree at which fit_implicit returns a polynomial. Stops early on an
/// ambiguous nullspace, since every larger degree inherits it.
template <SampleScalar S>
DegreeSearch find_degree(const SampleCloud<S>& cloud, int max_degree, Parity parity, const FitOptions& opt = {}) {
    DegreeSearch out;
    std::size_t last_size = 0;
    for (int deg = 1; deg <= max_degree; ++deg) {
        const auto size = static_cast<std::size_t>(monomial_count(static_cast<int>(cloud.dim), deg, parity));
        if (size == last_size) continue;
        last_size = size;
        FitResult r = fit_implicit(cloud, deg, parity, opt);
        const bool done = !std::holds_alternative<NoEquation>(r);
        if (auto* p = std::get_if<ImplicitPolynomial>(&r)) {
            out.degree = deg;
            out.polynomial = *p;
        }
        out.trace.emplace_back(deg, std::move(r));
        if (done) break;
    }
    return out;
}

/// Default cloud size for fitting at a given basis size.
inline std::size_t default_sample_count(int dim, int degree, Parity parity) {
    return 4 * static_cast<std::size_t>(monomial_count(dim, degree, parity));
}

}  // namespace discokit
