#include <discokit/io.hpp>
#include <discokit/membership.hpp>
#include <discokit/verify.hpp>

#include <gtest/gtest.h>

#include <random>

namespace dk = discokit;
using Eigen::MatrixXd;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {

VectorXd unit_sphere_point(std::mt19937_64& gen, Eigen::Index d) { return dk::random_unit_vector(gen, d); }

void expect_valid_separation(const dk::Discotope& dt, const dk::MembershipReport& r) {
    ASSERT_FALSE(r.inside());
    const auto& sep = std::get<dk::SeparatingDirection>(r.certificate);
    EXPECT_NEAR(sep.u.norm(), 1.0, 1e-12);
    EXPECT_GT(sep.u.dot(r.point) - dk::support_raw(dt, sep.u), 1e-8);
    EXPECT_NEAR(sep.violation, sep.u.dot(r.point) - dk::support_raw(dt, sep.u), 1e-12);
}

}  // namespace

TEST(Lmo, DiceExamples) {
    const auto dice = dk::examples::dice();
    // Disc 1 is orthogonal to e1 and contributes nothing.
    EXPECT_TRUE(dk::lmo(dice, Vector3d(1, 0, 0)).isApprox(Vector3d(-2, 0, 0)));
    const Vector3d v = dk::lmo(dice, Vector3d(1, 1, 1));
    const double s = 1 / std::sqrt(2.0);
    EXPECT_TRUE(v.isApprox(Vector3d(-2 * s, -2 * s, -2 * s)));
    EXPECT_THROW(dk::lmo(dice, Vector3d::Zero()), dk::ZeroDirection);
    EXPECT_THROW(dk::lmo(dice, VectorXd::Ones(2)), dk::InvalidInput);
}

TEST(Lmo, AttainsMinusSupport) {
    const auto dt = dk::perturbed(dk::examples::dice(), 0.25, 2);
    std::mt19937_64 gen(3);
    for (int k = 0; k < 100; ++k) {
        const VectorXd c = dk::gaussian_vector(gen, 3);
        EXPECT_NEAR(c.dot(dk::lmo(dt, c)), -dk::support_raw(dt, c), 1e-12 * (1 + c.norm()));
    }
}

TEST(Project, OriginIsInside) {
    const auto r = dk::project(dk::examples::dice(), VectorXd::Zero(3));
    ASSERT_TRUE(r.inside());
    const auto& w = std::get<dk::InsideWitness>(r.certificate);
    VectorXd x = VectorXd::Zero(3);
    for (std::size_t k = 0; k < w.weights.size(); ++k) x += w.weights[k] * w.vertices[k];
    EXPECT_LT(x.norm(), 1e-15);
}

TEST(Project, ScaledBoundaryPoints) {
    const auto dice = dk::examples::dice();
    std::mt19937_64 gen(11);
    for (int k = 0; k < 10; ++k) {
        const VectorXd u = unit_sphere_point(gen, 3);
        const VectorXd b = dk::gradient_support(dice, dk::Direction::normalized(u));
        const auto in = dk::project(dice, 0.9 * b);
        EXPECT_TRUE(in.inside());
        const auto& w = std::get<dk::InsideWitness>(in.certificate);
        double total = 0.0;
        VectorXd x = VectorXd::Zero(3);
        for (std::size_t i = 0; i < w.weights.size(); ++i) {
            EXPECT_GE(w.weights[i], 0.0);
            total += w.weights[i];
            x += w.weights[i] * w.vertices[i];
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
        EXPECT_LT((x - 0.9 * b).norm(), 1e-5);
        const auto on = dk::project(dice, b);
        EXPECT_TRUE(on.inside());
        EXPECT_LE(on.distance_estimate, 10 * 1e-6);
        const auto out = dk::project(dice, 1.1 * b);
        expect_valid_separation(dice, out);
    }
}

TEST(Project, SymmetricUnderNegation) {
    const auto dice = dk::examples::dice();
    const VectorXd p = Vector3d(2.5, 0.3, -1.2);
    const auto a = dk::project(dice, p);
    const auto b = dk::project(dice, -p);
    EXPECT_EQ(a.inside(), b.inside());
    EXPECT_NEAR(a.distance_estimate, b.distance_estimate, 1e-9);
}

TEST(Project, GapHistoryIsMonotone) {
    const auto r = dk::project(dk::examples::dice(), Vector3d(3, 1, 0.5));
    ASSERT_FALSE(r.gap_history.empty());
    EXPECT_TRUE(std::is_sorted(r.gap_history.rbegin(), r.gap_history.rend()));
}

TEST(Project, RayBracketsBoundary) {
    // Along a ray the membership flips exactly once, at h(u) / <u, direction> scale.
    const auto dt = dk::perturbed(dk::examples::quartic_020(), 0.25, 5);
    std::mt19937_64 gen(13);
    for (int k = 0; k < 5; ++k) {
        const VectorXd u = unit_sphere_point(gen, 3);
        const VectorXd b = dk::gradient_support(dt, dk::Direction::normalized(u));
        EXPECT_TRUE(dk::project(dt, 0.5 * b).inside());
        EXPECT_TRUE(dk::project(dt, 0.95 * b).inside());
        EXPECT_FALSE(dk::project(dt, 1.05 * b).inside());
        EXPECT_FALSE(dk::project(dt, 2.0 * b).inside());
    }
}

TEST(Project, Errors) {
    const auto dice = dk::examples::dice();
    EXPECT_THROW(dk::project(dice, VectorXd::Ones(2)), dk::InvalidInput);
    EXPECT_THROW(dk::project(dice, Vector3d(std::nan(""), 0, 0)), dk::InvalidInput);
    dk::ProjectOptions bad;
    bad.tol = 0;
    EXPECT_THROW(dk::project(dice, Vector3d(1, 0, 0), bad), dk::InvalidInput);
    // A tight budget on a boundary point cannot certify either way.
    dk::ProjectOptions tight;
    tight.max_iter = 3;
    const VectorXd b = dk::gradient_support(dice, dk::Direction::normalized(Vector3d(1, 2, 3)));
    EXPECT_THROW(dk::project(dice, b, tight), dk::NotConverged);
}

TEST(Io, DiscotopeRoundTrip) {
    const auto dt = dk::perturbed(dk::examples::dice(), 0.25, 9);
    const auto back = dk::io::discotope_from_json(nlohmann::json::parse(dk::io::discotope_to_json(dt).dump()));
    ASSERT_EQ(back.size(), dt.size());
    for (std::size_t j = 0; j < dt.size(); ++j) EXPECT_EQ(back.discs()[j].basis(), dt.discs()[j].basis());
}

TEST(Io, DiscotopeErrorsNameTheField) {
    auto msg = [](const std::string& text) -> std::string {
        try {
            dk::io::discotope_from_json(dk::io::detail::parse_json(text, "s.json"), "s.json");
        } catch (const dk::io::ParseError& e) {
            return e.what();
        }
        return "";
    };
    EXPECT_EQ(msg(R"({"discs": []})"), "s.json.ambient_dim: missing field");
    EXPECT_EQ(msg(R"({"ambient_dim": 3, "discs": [{"basis": [[1, 0]]}]})"),
              "s.json.discs[0].basis[0]: column has 2 entries, ambient_dim is 3");
    EXPECT_EQ(msg(R"({"ambient_dim": 2, "discs": [{"basis": [[1, "a"]]}]})"),
              "s.json.discs[0].basis[0][1]: expected a number");
    EXPECT_EQ(msg("{\n  \"ambient_dim\": 3,\n  oops\n}"), "s.json:3:3: malformed JSON");
    EXPECT_NE(msg(R"({"ambient_dim": 2, "discs": [{"basis": [[1, 0], [2, 0]]}]})").find("s.json.discs[0]"),
              std::string::npos);
}

TEST(Io, PolynomialRoundTrip) {
    const auto cloud = dk::sample_S<dk::Complex>(dk::examples::quartic_020(), 40, 5);
    const auto p = std::get<dk::ImplicitPolynomial>(dk::fit_implicit(cloud, 4, dk::Parity::even_each));
    const auto back = dk::io::polynomial_from_json(nlohmann::json::parse(dk::io::polynomial_to_json(p).dump()));
    EXPECT_EQ(back.terms, p.terms);
    EXPECT_EQ(back.parity, p.parity);
    EXPECT_EQ(back.fit_residual, p.fit_residual);
    EXPECT_THROW(dk::io::polynomial_from_json(nlohmann::json::parse(R"({"dim": 2, "terms": [{"exp": [1], "coef": 1}]})")),
                 dk::io::ParseError);
    EXPECT_THROW(dk::io::polynomial_from_json(nlohmann::json::parse(
                     R"({"dim": 1, "terms": [{"exp": [1], "coef": 1}, {"exp": [1], "coef": 2}]})")),
                 dk::io::ParseError);
}

TEST(Io, CsvRoundTripIsExact) {
    const auto real = dk::sample_S<double>(dk::examples::dice(), 20, 7);
    const auto lr = dk::io::cloud_from_csv(dk::io::cloud_to_csv(real, "test"));
    ASSERT_FALSE(lr.complex);
    ASSERT_EQ(lr.size(), real.size());
    for (std::size_t k = 0; k < real.size(); ++k) {
        EXPECT_EQ(lr.real.points[k].x, real.points[k].x);
        EXPECT_EQ(lr.real.points[k].direction, real.points[k].direction);
        EXPECT_EQ(lr.real.points[k].signs, real.points[k].signs);
        EXPECT_EQ(lr.real.points[k].sheet, real.points[k].sheet);
    }
    const auto cplx = dk::sample_S<dk::Complex>(dk::examples::dice(), 20, 7);
    const auto lc = dk::io::cloud_from_csv(dk::io::cloud_to_csv(cplx, ""));
    ASSERT_TRUE(lc.complex);
    for (std::size_t k = 0; k < cplx.size(); ++k) EXPECT_EQ(lc.cplx.points[k].x, cplx.points[k].x);
    const auto lj = dk::io::cloud_from_json(nlohmann::json::parse(dk::io::cloud_to_json(cplx).dump()));
    ASSERT_TRUE(lj.complex);
    for (std::size_t k = 0; k < cplx.size(); ++k) EXPECT_EQ(lj.cplx.points[k].x, cplx.points[k].x);
}

TEST(Io, CsvErrorsCarryLineNumbers) {
    auto msg = [](const std::string& text) -> std::string {
        try {
            dk::io::cloud_from_csv(text, "c.csv");
        } catch (const dk::io::ParseError& e) {
            return e.what();
        }
        return "";
    };
    EXPECT_EQ(msg("x1,x2\n1,2\n3\n"), "c.csv:3: expected 2 fields, got 1");
    EXPECT_EQ(msg("# hi\nx1,x2\n1,zz\n"), "c.csv:3: field x2 is not a finite number");
    EXPECT_EQ(msg("x1,sigma\n1,+*\n"), "c.csv:2: sign pattern must consist of '+' and '-'");
    EXPECT_EQ(msg(""), "c.csv: missing CSV header");
}

TEST(Io, FormatAndHash) {
    for (double v : {0.1, 1.0 / 3, 1e-300, -2.5e17, 123456789.125}) EXPECT_EQ(std::stod(dk::io::format_double(v)), v);
    EXPECT_EQ(dk::io::hex64(dk::io::fnv1a("")), "cbf29ce484222325");
    EXPECT_EQ(dk::io::config_hash(nlohmann::json{{"a", 1}}), dk::io::config_hash(nlohmann::json{{"a", 1}}));
    EXPECT_NE(dk::io::config_hash(nlohmann::json{{"a", 1}}), dk::io::config_hash(nlohmann::json{{"a", 2}}));
}
