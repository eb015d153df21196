#include <discokit/critical_locus.hpp>
#include <discokit/exact.hpp>
#include <discokit/verify.hpp>

#include <gtest/gtest.h>

#include <numbers>
#include <set>

namespace dk = discokit;
using Eigen::MatrixXd;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(BuildM, DiceAtZeroAndQuarterTurn) {
    const auto dice = dk::examples::dice();
    MatrixXd m0 = dk::build_M(dice, {{0, 0, 0}});
    MatrixXd e0(3, 3);
    e0 << 0, 0, 1, 1, 0, 0, 0, 1, 0;
    EXPECT_TRUE(m0.isApprox(e0));
    EXPECT_EQ(dk::rank_defect(m0), 0);

    MatrixXd m1 = dk::build_M(dice, {{pi / 2, pi / 2, pi / 2}});
    MatrixXd e1(3, 3);
    e1 << 0, -1, 0, 0, 0, -1, -1, 0, 0;
    EXPECT_NEAR((m1 - e1).norm(), 0.0, 1e-15);
    EXPECT_EQ(dk::rank_defect(m1), 0);
}

TEST(BuildM, SingleEllipseAlwaysDefective) {
    const dk::Discotope one({dk::Disc(MatrixXd::Identity(2, 2))});
    for (double t : {0.0, 1.0, 2.5}) EXPECT_EQ(dk::rank_defect(dk::build_M(one, {{t}})), 1);
}

TEST(BuildM, RequiresTwoDiscs) {
    EXPECT_THROW(dk::build_M(dk::examples::segment_120(), {{0, 0, 0}}), dk::NotTwoDiscs);
    EXPECT_THROW(dk::build_M(dk::examples::dice(), {{0, 0}}), dk::InvalidInput);
}

TEST(BuildM, MatchesRationalChartJacobian) {
    // Rows of the chart's differential are tangents scaled by 2/(1+t^2).
    const auto dice = dk::examples::dice();
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> ang(0, 2 * pi);
    for (int k = 0; k < 50; ++k) {
        const std::array<double, 3> a{ang(gen), ang(gen), ang(gen)};
        const MatrixXd m = dk::build_M(dice, {{a[0], a[1], a[2]}});
        std::array<double, 3> t{};
        for (int i = 0; i < 3; ++i) t[i] = std::tan(a[i] / 2);
        const double det_scaled = dk::dice_det(t) / ((1 + t[0] * t[0]) * (1 + t[1] * t[1]) * (1 + t[2] * t[2]));
        EXPECT_NEAR(std::abs(m.determinant()), std::abs(det_scaled), 1e-9 * std::max(1.0, std::abs(det_scaled)));
    }
}

TEST(Sheets, Enumeration) {
    const auto s = dk::enumerate_sheets(3);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[0].sigma, (std::vector<int>{1, 1, 1}));
    for (const auto& p : s) EXPECT_EQ(p.sigma[0], 1);
    EXPECT_EQ(dk::enumerate_sheets(1).size(), 1u);
}

TEST(CriticalPoint, AllPlusIsGradient) {
    std::mt19937_64 gen(4);
    const auto dice = dk::examples::dice();
    for (int k = 0; k < 100; ++k) {
        const dk::Direction u(dk::random_unit_vector(gen, 3));
        EXPECT_TRUE(dk::sample_critical_point(dice, u, {{1, 1, 1}}).isApprox(dk::gradient_support(dice, u), 1e-15));
    }
}

TEST(CriticalPoint, SignFlipIsRankDefective) {
    const auto dice = dk::examples::dice();
    const auto u = dk::Direction::normalized(Vector3d(1, 1, 1));
    const dk::SignPattern sigma{{1, -1, 1}};
    std::vector<VectorXd> xi;
    for (std::size_t j = 0; j < 3; ++j) xi.push_back(sigma.sigma[j] * dk::exposed_point_disc(dice.disc(j), u));
    const auto cfg = dk::angles_of(dice, xi);
    EXPECT_GE(dk::rank_defect(dk::build_M(dice, cfg)), 1);
}

TEST(CriticalPoint, QuarticExample) {
    const auto dt = dk::examples::quartic_020();
    const auto u = dk::Direction::normalized(Vector3d(1, 0, 1));
    const VectorXd p = dk::sample_critical_point(dt, u, {{1, 1}});
    const Vector3d expect(1 / std::sqrt(2.0), 0, 1 + 1 / std::sqrt(2.0));
    EXPECT_NEAR((p - expect).norm(), 0.0, 1e-15);
    const auto f = dk::examples::quartic_020_equation().to_double();
    EXPECT_NEAR(dk::evaluate(f, p), 0.0, 1e-14);
}

TEST(CriticalPoint, Errors) {
    const auto dice = dk::examples::dice();
    EXPECT_THROW(dk::sample_critical_point(dice, dk::Direction(Vector3d(0, 0, 1)), {{1, 1, 1}}), dk::DegenerateDirection);
    EXPECT_THROW(dk::sample_critical_point(dice, dk::Direction(Vector3d(0, 0, 1)), {{1, 1}}), dk::InvalidInput);
    EXPECT_THROW(dk::sample_critical_point(dice, dk::Direction(Vector3d(0, 0, 1)), {{1, 0, 1}}), dk::InvalidInput);
}

TEST(SampleS, CountsSheetsAndMetadata) {
    const auto dice = dk::examples::dice();
    const auto cloud = dk::sample_S(dice, 500, 9);
    ASSERT_EQ(cloud.size(), 2000u);
    for (const auto& pt : cloud.points) {
        VectorXd sum = VectorXd::Zero(3);
        for (std::size_t j = 0; j < 3; ++j) sum += pt.signs[j] * pt.contributions[j];
        EXPECT_LE((sum - pt.x).norm(), 1e-12);
        EXPECT_EQ(pt.signs, dk::enumerate_sheets(3)[pt.sheet].sigma);
    }
    EXPECT_EQ(dk::sample_S(dice, 10, 9, dk::Sheets::all_mirrored).size(), 80u);
    EXPECT_EQ(dk::sample_S(dk::random_planar_ellipses(2, 1), 10, 1).size(), 20u);
}

TEST(SampleS, BoundarySheetIsExposed) {
    const auto dice = dk::examples::dice();
    const auto cloud = dk::sample_S(dice, 300, 12, dk::Sheets::boundary);
    ASSERT_EQ(cloud.size(), 300u);
    for (const auto& pt : cloud.points) {
        const dk::Direction u(pt.direction);
        EXPECT_NEAR(u.vec().dot(pt.x), dk::support_discotope(dice, u), 1e-12);
    }
}

TEST(SampleS, DeterministicAcrossThreadCounts) {
    const auto dice = dk::examples::dice();
    setenv("DISCOKIT_THREADS", "1", 1);
    const auto a = dk::sample_S<dk::Complex>(dice, 300, 77).matrix();
    setenv("DISCOKIT_THREADS", "4", 1);
    const auto b = dk::sample_S<dk::Complex>(dice, 300, 77).matrix();
    unsetenv("DISCOKIT_THREADS");
    EXPECT_TRUE((a.array() == b.array()).all());
    const auto c = dk::sample_S<dk::Complex>(dice, 300, 78).matrix();
    EXPECT_FALSE((a.array() == c.array()).all());
}

TEST(SampleS, RequiresNondegeneracy) {
    EXPECT_THROW(dk::sample_S(dk::examples::r6_join(), 10, 1), dk::ConditionViolated);
}

TEST(SampleS, SheetClosureAndMaximality) {
    std::mt19937_64 gen(13);
    const auto dice = dk::examples::dice();
    const auto sheets = dk::enumerate_sheets(3);
    for (int k = 0; k < 200; ++k) {
        const dk::Direction u(dk::random_unit_vector(gen, 3));
        const VectorXd top = dk::sample_critical_point(dice, u, sheets[0]);
        for (const auto& s : sheets) {
            const VectorXd p = dk::sample_critical_point(dice, u, s);
            EXPECT_LE((p + dk::sample_critical_point(dice, -u, s)).norm(), 1e-14);
            EXPECT_GE(u.vec().dot(top), u.vec().dot(p) - 1e-10);
        }
    }
}

TEST(SampleS, ComplexPointsSatisfyPolynomialIdentities) {
    // Complex critical points of a single circle satisfy x1^2 + x2^2 = 1.
    const dk::Discotope circle({dk::Disc(MatrixXd::Identity(2, 2))});
    const auto cloud = dk::sample_S<dk::Complex>(circle, 100, 3);
    for (const auto& pt : cloud.points) EXPECT_LT(std::abs(pt.x(0) * pt.x(0) + pt.x(1) * pt.x(1) - 1.0), 1e-12);
}

TEST(SampleJoin, ConditionAndCounts) {
    EXPECT_THROW(dk::sample_join(dk::examples::dice(), 10, 1), dk::ConditionViolated);
    const auto cloud = dk::sample_join(dk::examples::r6_join(), 100, 5);
    EXPECT_EQ(cloud.size(), 100u);
    for (const auto& pt : cloud.points) {
        VectorXd sum = VectorXd::Zero(6);
        for (const auto& c : pt.contributions) sum += c;
        EXPECT_LE((sum - pt.x).norm(), 1e-12);
    }
}

TEST(SampleJoin, CircleInSpace) {
    MatrixXd b(3, 2);
    b << 1, 0, 0, 1, 0, 0;
    const dk::Discotope circle({dk::Disc(b)});
    for (const auto& pt : dk::sample_join(circle, 200, 2).points) {
        EXPECT_NEAR(pt.x(2), 0.0, 1e-15);
        EXPECT_NEAR(pt.x(0) * pt.x(0) + pt.x(1) * pt.x(1), 1.0, 1e-14);
    }
}

TEST(SampleJoin, SkewSegmentsGiveFourPoints) {
    const dk::Discotope segs({dk::Disc(Vector3d(1, 0, 0)), dk::Disc(Vector3d(0, 1, 1))});
    std::set<std::pair<int, int>> seen;
    for (const auto& pt : dk::sample_join(segs, 200, 4).points)
        seen.insert({static_cast<int>(std::lround(pt.x(0))), static_cast<int>(std::lround(pt.x(1)))});
    EXPECT_EQ(seen.size(), 4u);
}

TEST(SampleJoin, TangentRankMatchesDimension) {
    // Finite differences over the parameter spheres: rank equals sum (n_j - 1) = 4.
    const auto dt = dk::examples::r6_join();
    std::mt19937_64 gen(6);
    for (int k = 0; k < 50; ++k) {
        std::vector<VectorXd> w;
        for (const auto& D : dt.discs()) w.push_back(dk::random_unit_vector(gen, D.dim()));
        MatrixXd tangents(6, 0);
        for (std::size_t j = 0; j < dt.size(); ++j) {
            const MatrixXd comp = dk::linalg::orthogonal_complement(w[j]);
            for (Eigen::Index c = 0; c < comp.cols(); ++c) {
                const double h = 1e-6;
                const VectorXd plus = (w[j] + h * comp.col(c)).normalized();
                const VectorXd minus = (w[j] - h * comp.col(c)).normalized();
                tangents.conservativeResize(6, tangents.cols() + 1);
                tangents.col(tangents.cols() - 1) = dt.disc(j).basis() * (plus - minus) / (2 * h);
            }
        }
        EXPECT_EQ(dk::linalg::numeric_rank(tangents, 1e-6), 4);
    }
}

TEST(RankDefect, CriticalSamplesAndGenericConfigs) {
    const auto dice = dk::examples::dice();
    const auto cloud = dk::sample_S(dice, 200, 31, dk::Sheets::all_mirrored);
    for (const auto& pt : cloud.points) EXPECT_LE(dk::minor_ratio(dk::build_M(dice, dk::angles_of(dice, pt))), 1e-8);
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> ang(0, 2 * pi);
    for (int k = 0; k < 200; ++k) {
        const dk::AngleConfig cfg{{ang(gen), ang(gen), ang(gen)}};
        EXPECT_EQ(dk::rank_defect(dk::build_M(dice, cfg)), 0);
    }
}
