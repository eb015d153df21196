#pragma once

#include "critical_locus.hpp"
#include "dice_surface_table.hpp"
#include "exact.hpp"
#include "geometry.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace discokit {

namespace detail {
inline MatrixXd columns(std::initializer_list<std::initializer_list<double>> cols) {
    const auto d = static_cast<Index>(cols.begin()->size());
    MatrixXd m(d, static_cast<Index>(cols.size()));
    Index c = 0;
    for (const auto& col : cols) {
        Index r = 0;
        for (double v : col) m(r++, c) = v;
        ++c;
    }
    return m;
}
}  // namespace detail

namespace examples {

/// Three unit discs in the coordinate planes x1 = 0, x2 = 0, x3 = 0.
/// Column order gives build_M rows b2 cos - b1 sin matching the rational chart.
inline Discotope dice() {
    return Discotope({Disc(detail::columns({{0, 1, 0}, {0, 0, 1}})),
                      Disc(detail::columns({{0, 0, 1}, {1, 0, 0}})),
                      Disc(detail::columns({{1, 0, 0}, {0, 1, 0}}))});
}

/// Unit discs in x1 = 0 and x2 = 0; type (0,2,0).
inline Discotope quartic_020() {
    return Discotope({Disc(detail::columns({{0, 1, 0}, {0, 0, 1}})),
                      Disc(detail::columns({{1, 0, 0}, {0, 0, 1}}))});
}

/// The diagonal segment x1 = x2, x3 = 0 added to quartic_020; type (1,2,0).
inline Discotope segment_120() {
    return Discotope({Disc(detail::columns({{1, 1, 0}})),
                      Disc(detail::columns({{0, 1, 0}, {0, 0, 1}})),
                      Disc(detail::columns({{1, 0, 0}, {0, 0, 1}}))});
}

/// Two circles and a 3-ball in R^6 whose Minkowski sum has codimension-two S.
inline Discotope r6_join() {
    return Discotope({Disc(detail::columns({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}})),
                      Disc(detail::columns({{0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}})),
                      Disc(detail::columns({{0.5, 0, 0.5, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}))});
}

/// Unit 3-balls in x4 = 0 and x1 = 0 in R^4.
inline Discotope r4_quartic() {
    return Discotope({Disc(detail::columns({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})),
                      Disc(detail::columns({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}))});
}

inline RationalPolynomial quartic_020_equation() {
    return parse_polynomial("x1^4 - 2 x1^2 x2^2 + x2^4 + 2 x1^2 x3^2 + 2 x2^2 x3^2 + x3^4 - 4 x3^2", 3);
}

inline RationalPolynomial r4_quartic_equation() {
    return parse_polynomial(
        "x1^4 + 2 x1^2 x2^2 + x2^4 + 2 x1^2 x3^2 + 2 x2^2 x3^2 + x3^4 - 2 x1^2 x4^2 + 2 x2^2 x4^2"
        " + 2 x3^2 x4^2 + x4^4 - 4 x2^2 - 4 x3^2",
        4);
}

/// One cubic and three quartics cutting out S for r6_join.
inline std::vector<RationalPolynomial> r6_join_generators() {
    return {
        parse_polynomial("4 x1^2 x3 + 4 x2^2 x3 - 4 x1 x3^2 - 4 x1 x4^2 + x1 x5^2 - x3 x5^2 + x1 x6^2 - x3 x6^2"
                         " + 3 x1 - 3 x3",
                         6),
        parse_polynomial("16 x3^4 + 32 x3^2 x4^2 + 16 x4^4 + 8 x3^2 x5^2 - 8 x4^2 x5^2 + x5^4 + 8 x3^2 x6^2"
                         " - 8 x4^2 x6^2 + 2 x5^2 x6^2 + x6^4 - 40 x3^2 - 24 x4^2 + 6 x5^2 + 6 x6^2 + 9",
                         6),
        parse_polynomial("16 x1^4 + 32 x1^2 x2^2 + 16 x2^4 + 8 x1^2 x5^2 - 8 x2^2 x5^2 + x5^4 + 8 x1^2 x6^2"
                         " - 8 x2^2 x6^2 + 2 x5^2 x6^2 + x6^4 - 40 x1^2 - 24 x2^2 + 6 x5^2 + 6 x6^2 + 9",
                         6),
        parse_polynomial("16 x1^2 x3^2 + 16 x2^2 x3^2 + 16 x1^2 x4^2 + 16 x2^2 x4^2 - 4 x1^2 x5^2 - 4 x2^2 x5^2"
                         " - 4 x3^2 x5^2 - 4 x4^2 x5^2 - 4 x1^2 x6^2 - 4 x2^2 x6^2 - 4 x3^2 x6^2 - 4 x4^2 x6^2"
                         " + x5^4 + 2 x5^2 x6^2 + x6^4 + 16 x1 x3 x5^2 + 16 x1 x3 x6^2 - 12 x1^2 - 12 x2^2"
                         " - 16 x1 x3 - 12 x3^2 - 12 x4^2 + 6 x5^2 + 6 x6^2 + 9",
                         6),
    };
}

/// The degree-24 defining polynomial of the dice surface (455 even monomials).
inline RationalPolynomial dice_equation() {
    RationalPolynomial p;
    p.dim = 3;
    for (const auto& t : data::dice_surface_terms) p.terms.emplace(Exponent{t.e1, t.e2, t.e3}, Rational(t.coef));
    return p;
}

}  // namespace examples

// ---- dice apparatus -------------------------------------------------------

/// (1-t1^2)(1-t2^2)(1-t3^2) - 8 t1 t2 t3: the critical-locus determinant of the
/// rational chart without its positive denominator.
inline double dice_det(const std::array<double, 3>& t) {
    const auto [t1, t2, t3] = t;
    return (1 - t1 * t1) * (1 - t2 * t2) * (1 - t3 * t3) - 8 * t1 * t2 * t3;
}

struct TwoRoots {
    double minus;
    double plus;
};
struct LinearCase {
    double t3 = 0.0;
};
struct DegenerateFiber {};

using T3Solution = std::variant<TwoRoots, LinearCase, DegenerateFiber>;

/// Solves a t3^2 + 8 t1 t2 t3 - a = 0 with a = (1-t1^2)(1-t2^2).
inline T3Solution solve_t3(double t1, double t2) {
    const double a = (1 - t1 * t1) * (1 - t2 * t2);
    const double b = 8 * t1 * t2;
    if (a == 0.0) {
        if (b == 0.0) return DegenerateFiber{};
        return LinearCase{0.0};
    }
    // q avoids cancellation; the roots are q/a and -a/q.
    const double q = -0.5 * (b + std::copysign(std::hypot(b, 2 * a), b));
    const double r1 = q / a;
    const double r2 = -a / q;
    return TwoRoots{std::min(r1, r2), std::max(r1, r2)};
}

/// (s1^2-t1^2)(s2^2-t2^2)(s3^2-t3^2) - 8 s1 s2 s3 t1 t2 t3 on pairs (s_i, t_i).
inline double multidegree_surface(const std::array<std::array<double, 2>, 3>& st) {
    double prod_quad = 1.0, prod_lin = 8.0;
    for (const auto& [s, t] : st) {
        prod_quad *= s * s - t * t;
        prod_lin *= s * t;
    }
    return prod_quad - prod_lin;
}

/// Sum of the three circle points of the rational chart at (t1, t2, t3).
inline Eigen::Vector3d phi_map(const std::array<double, 3>& t) {
    auto c = [](double x) { return (1 - x * x) / (1 + x * x); };
    auto s = [](double x) { return 2 * x / (1 + x * x); };
    const auto [t1, t2, t3] = t;
    return Eigen::Vector3d(0, c(t1), s(t1)) + Eigen::Vector3d(s(t2), 0, c(t2)) + Eigen::Vector3d(c(t3), s(t3), 0);
}

/// Angles on the dice boundaries with xi1 = (0, sin, cos), xi2 = (cos, 0, sin),
/// xi3 = (sin, cos, 0). The chart parameter is t = tan((pi/2 - theta) / 2).
struct DiceAngles {
    static double from_point(std::size_t disc, const Eigen::Vector3d& xi) {
        switch (disc) {
            case 0: return AngleConfig::wrap(std::atan2(xi(1), xi(2)));
            case 1: return AngleConfig::wrap(std::atan2(xi(2), xi(0)));
            case 2: return AngleConfig::wrap(std::atan2(xi(0), xi(1)));
            default: throw InvalidInput("dice has three discs");
        }
    }
};

struct Theta3Branch {
    double cos3;
    double sin3;
};

/// The four sign combinations of the closed-form (cos theta3, sin theta3).
inline std::array<Theta3Branch, 4> theta3_branches(double theta1, double theta2) {
    const double c1 = std::cos(theta1), s1 = std::sin(theta1);
    const double c2 = std::cos(theta2), s2 = std::sin(theta2);
    const double den = std::sqrt(c1 * c1 * c2 * c2 + s1 * s1 * s2 * s2);
    if (!(den > 1e-14)) throw InvalidInput("theta3 is undetermined at these angles");
    const double cm = std::abs(s1 * s2) / den;
    const double sm = std::abs(c1 * c2) / den;
    return {{{cm, sm}, {cm, -sm}, {-cm, sm}, {-cm, -sm}}};
}

/// Critical-locus residual of the angle triple, evaluated on half-angle
/// homogeneous coordinates so no chart pole is hit.
inline double dice_angle_residual(double theta1, double theta2, double cos3, double sin3) {
    const double theta3 = std::atan2(sin3, cos3);
    std::array<std::array<double, 2>, 3> st{};
    const std::array<double, 3> th{theta1, theta2, theta3};
    for (std::size_t i = 0; i < 3; ++i) {
        const double half = 0.5 * (std::numbers::pi / 2 - th[i]);
        st[i] = {std::cos(half), std::sin(half)};
    }
    return multidegree_surface(st);
}

inline constexpr double branch_tol = 1e-10;

/// Branches lying on the critical locus (two of the four for generic angles).
inline std::vector<Theta3Branch> filter_theta3_branches(double theta1, double theta2) {
    std::vector<Theta3Branch> out;
    for (const auto& b : theta3_branches(theta1, theta2))
        if (std::abs(dice_angle_residual(theta1, theta2, b.cos3, b.sin3)) <= branch_tol) out.push_back(b);
    return out;
}

/// Region label of a real dice critical configuration: quadrants of theta1 and
/// theta2 and the sign class of the theta3 branch; 32 labels in total.
struct DiceRegion {
    int quadrant1;
    int quadrant2;
    int branch;

    int index() const { return (quadrant1 * 4 + quadrant2) * 2 + branch; }
};

inline DiceRegion classify_dice_point(const std::array<Eigen::Vector3d, 3>& xi) {
    const double th1 = DiceAngles::from_point(0, xi[0]);
    const double th2 = DiceAngles::from_point(1, xi[1]);
    const double th3 = DiceAngles::from_point(2, xi[2]);
    auto quadrant = [](double a) { return std::min(3, static_cast<int>(a / (std::numbers::pi / 2))); };
    // The two admissible branches are negatives of each other; label by sign of cos theta3
    // (sin theta3 when the cosine vanishes).
    const double c3 = std::cos(th3), s3 = std::sin(th3);
    const int branch = std::abs(c3) > 1e-12 ? (c3 > 0 ? 0 : 1) : (s3 > 0 ? 0 : 1);
    return {quadrant(th1), quadrant(th2), branch};
}

// ---- fixtures ---------------------------------------------------------------

enum class SamplerKind { critical, join };

struct ExampleFixture {
    std::string name;
    Discotope discotope;
    std::vector<RationalPolynomial> known_equations;
    SamplerKind sampler = SamplerKind::critical;
    Parity parity = Parity::none;
    std::optional<int> expected_degree;
    std::optional<std::size_t> expected_terms;
    std::string note;
};

inline std::vector<ExampleFixture> fixtures() {
    std::vector<ExampleFixture> out;
    out.push_back({"dice", examples::dice(), {examples::dice_equation()}, SamplerKind::critical, Parity::even_each, 24,
                   455, "singular locus of degree 294 (informational, not computed)"});
    out.push_back({"quartic-020", examples::quartic_020(), {examples::quartic_020_equation()}, SamplerKind::critical,
                   Parity::even_each, 4, 7, ""});
    out.push_back({"r6-join", examples::r6_join(), examples::r6_join_generators(), SamplerKind::join, Parity::none,
                   std::nullopt, std::nullopt, "codimension 2, degree 8; checked through its four generators"});
    out.push_back({"r4-quartic", examples::r4_quartic(), {examples::r4_quartic_equation()}, SamplerKind::critical,
                   Parity::even_each, 4, 12, ""});
    return out;
}

inline std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& f : fixtures()) names.push_back(f.name);
    return names;
}

inline std::optional<ExampleFixture> find_fixture(const std::string& name) {
    for (auto& f : fixtures())
        if (f.name == name) return f;
    return std::nullopt;
}

}  // namespace discokit
