#pragma once

#include "implicitize.hpp"
#include "worked_examples.hpp"

#include <numbers>
#include <string>
#include <vector>

namespace discokit {

// ---- random instances -------------------------------------------------------

/// N ellipses in the plane with major axis 1, minor axis in [0.25, 0.5] and
/// orientations spread around pi j / N. Far-from-circular axes keep the
/// implicitization well conditioned.
inline Discotope random_planar_ellipses(std::size_t n, std::uint64_t seed) {
    auto gen = point_stream(seed, 0xe11ULL);
    std::uniform_real_distribution<double> jitter(-0.2, 0.2), minor(0.25, 0.5);
    std::vector<Disc> discs;
    for (std::size_t j = 0; j < n; ++j) {
        const double a = std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + jitter(gen);
        const double b = minor(gen);
        Eigen::Matrix2d m;
        m << std::cos(a), -b * std::sin(a), std::sin(a), b * std::cos(a);
        discs.emplace_back(MatrixXd(m));
    }
    return Discotope(std::move(discs));
}

/// Every basis entry of `base` perturbed by eps times a standard Gaussian.
inline Discotope perturbed(const Discotope& base, double eps, std::uint64_t seed) {
    auto gen = point_stream(seed, 0x9e7ULL);
    std::vector<Disc> discs;
    for (const auto& D : base.discs()) {
        MatrixXd b = D.basis();
        b += eps * MatrixXd(gaussian_vector(gen, b.size()).reshaped(b.rows(), b.cols()));
        discs.emplace_back(std::move(b));
    }
    return Discotope(std::move(discs));
}

// ---- fixture verification ---------------------------------------------------

struct VerifyOptions {
    std::size_t count = 2000;
    std::size_t held_out = 200;
    std::uint64_t seed = 1;
    int max_degree = 0;  // 0: the fixture's expected degree
    double term_threshold = 1e-8;
    double residual_tol = 1e-7;
    double coefficient_tol = 1e-6;
    double generator_tol = 1e-9;
};

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string fixture;
    std::vector<VerifyCheck> checks;
    std::optional<ImplicitPolynomial> fitted;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

namespace detail {
inline std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}
}  // namespace detail

inline VerifyReport verify_fixture(const ExampleFixture& fx, const VerifyOptions& opt = {}) {
    VerifyReport rep;
    rep.fixture = fx.name;
    auto add = [&](std::string name, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    if (fx.sampler == SamplerKind::join) {
        const RealCloud cloud = sample_join(fx.discotope, opt.count, opt.seed);
        for (std::size_t g = 0; g < fx.known_equations.size(); ++g) {
            const ImplicitPolynomial p = fx.known_equations[g].cleared().to_double();
            double worst = 0.0;
            for (const auto& pt : cloud.points) worst = std::max(worst, std::abs(evaluate(p, pt.x)));
            add("generator " + std::to_string(g + 1), worst <= opt.generator_tol, "max |value| = " + detail::sci(worst));
        }
        return rep;
    }

    const ComplexCloud cloud = sample_S<Complex>(fx.discotope, opt.count, opt.seed, Sheets::all);
    const int max_deg = opt.max_degree > 0 ? opt.max_degree : fx.expected_degree.value_or(24);
    const DegreeSearch search = find_degree(cloud, max_deg, fx.parity);
    if (!search.degree) {
        add("degree", false, "no equation up to degree " + std::to_string(max_deg));
        return rep;
    }
    const ImplicitPolynomial& p = *search.polynomial;
    rep.fitted = p;
    if (fx.expected_degree)
        add("degree", *search.degree == *fx.expected_degree,
            "found " + std::to_string(*search.degree) + ", expected " + std::to_string(*fx.expected_degree));
    const std::size_t terms = count_terms(p, opt.term_threshold);
    if (fx.expected_terms)
        add("terms", terms == *fx.expected_terms,
            "found " + std::to_string(terms) + ", expected " + std::to_string(*fx.expected_terms));

    bool even = true;
    for (const auto& [e, c] : p.pruned(opt.term_threshold).terms)
        for (int v : e) even = even && v % 2 == 0;
    add("even exponents", even, even ? "all exponents even" : "odd exponent present");

    const RealCloud held = sample_S<double>(fx.discotope, opt.held_out, opt.seed ^ 0x5eed5eedULL, Sheets::all);
    double worst = 0.0;
    for (const auto& pt : held.points) worst = std::max(worst, relative_residual(p, pt.x));
    add("held-out residual", worst <= opt.residual_tol, "max relative residual = " + detail::sci(worst));

    for (std::size_t k = 0; k < fx.known_equations.size(); ++k) {
        const double dist = coefficient_distance(p, fx.known_equations[k].to_double());
        add("known equation " + std::to_string(k + 1), dist <= opt.coefficient_tol,
            "max coefficient difference = " + detail::sci(dist));
    }
    return rep;
}

}  // namespace discokit
