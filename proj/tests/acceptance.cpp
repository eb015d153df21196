// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.
#include <discokit.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace dk = discokit;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

std::string summarize(const dk::VerifyReport& r) {
    std::ostringstream s;
    for (std::size_t k = 0; k < r.checks.size(); ++k)
        s << (k ? "; " : "") << r.checks[k].name << ": " << r.checks[k].detail << (r.checks[k].pass ? "" : " [FAIL]");
    return s.str();
}

Outcome verify_named(const std::string& name, std::size_t count) {
    dk::VerifyOptions opt;
    opt.count = count;
    const auto r = dk::verify_fixture(*dk::find_fixture(name), opt);
    return {r.pass(), summarize(r)};
}

Outcome c1_dice() { return verify_named("dice", 2000); }

Outcome c2_quartic() { return verify_named("quartic-020", 2000); }

Outcome c3_r4_quartic() {
    auto o = verify_named("r4-quartic", 2000);
    const dk::Rational v = dk::examples::r4_quartic_equation().evaluate({0, 2, 0, 0});
    o.pass = o.pass && v == 0;
    o.detail += "; exact value at (0,2,0,0) = " + v.str();
    return o;
}

Outcome c4_join() { return verify_named("r6-join", 1000); }

Outcome planar(std::size_t n, std::uint64_t seed, int expected) {
    const int max_degree = static_cast<int>(n * (1u << n));
    const auto dt = dk::random_planar_ellipses(n, seed);
    const auto count = dk::default_sample_count(2, max_degree, dk::Parity::even_total) / (1u << (n - 1)) + 1;
    const auto s = dk::find_degree(dk::sample_S<dk::Complex>(dt, count, seed), max_degree, dk::Parity::even_total);
    const int found = s.degree.value_or(-1);
    return {found == expected, std::to_string(found)};
}

Outcome c5_planar() {
    Outcome o{true, "N=2 degrees:"};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto r = planar(2, seed, 8);
        o.pass = o.pass && r.pass;
        o.detail += " " + r.detail;
    }
    const auto r3 = planar(3, 1, 24);
    o.pass = o.pass && r3.pass;
    o.detail += "; N=3 degree: " + r3.detail;
    return o;
}

Outcome generic_degree(const dk::Discotope& base, int expected, std::uint64_t seed) {
    const auto dt = dk::perturbed(base, 0.25, seed);
    const auto count = dk::default_sample_count(3, expected, dk::Parity::even_total) / (1u << (dt.size() - 1)) + 1;
    const auto s = dk::find_degree(dk::sample_S<dk::Complex>(dt, count, seed), expected, dk::Parity::even_total);
    const int found = s.degree.value_or(-1);
    return {found == expected, std::to_string(found)};
}

Outcome c6_degree_bound() {
    const auto a = generic_degree(dk::examples::quartic_020(), 4, 1);
    const auto b = generic_degree(dk::examples::dice(), 24, 1);
    return {a.pass && b.pass, "generic (0,2,0): " + a.detail + " (bound 4); generic (0,3,0): " + b.detail + " (bound 24)"};
}

Outcome c7_rank_defect() {
    // Two-disc bodies whose M has at least as many rows as columns.
    const std::vector<std::pair<std::string, dk::Discotope>> bodies{
        {"dice", dk::examples::dice()},
        {"generic (0,3,0)", dk::perturbed(dk::examples::dice(), 0.25, 1)},
        {"planar N=2", dk::random_planar_ellipses(2, 1)},
        {"planar N=3", dk::random_planar_ellipses(3, 1)}};
    Outcome o{true, ""};
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
    for (const auto& [name, dt] : bodies) {
        const std::size_t patterns = std::size_t{1} << (dt.size() - 1);
        const auto cloud = dk::sample_S<double>(dt, 500 / patterns, 3, dk::Sheets::all);
        double worst = 0.0;
        for (const auto& pt : cloud.points) worst = std::max(worst, dk::minor_ratio(dk::build_M(dt, dk::angles_of(dt, pt))));
        std::size_t full = 0;
        for (int k = 0; k < 500; ++k) {
            dk::AngleConfig cfg;
            for (std::size_t j = 0; j < dt.size(); ++j) cfg.theta.push_back(ang(gen));
            full += dk::rank_defect(dk::build_M(dt, cfg)) == 0;
        }
        o.pass = o.pass && cloud.size() >= 500 && worst <= 1e-8 && full == 500;
        o.detail += (o.detail.empty() ? "" : "; ") + name + ": " + std::to_string(cloud.size()) +
                    " critical, worst ratio " + sci(worst) + ", " + std::to_string(full) + "/500 random full rank";
    }
    return o;
}

Outcome c8_regions() {
    const auto cloud = dk::sample_S<double>(dk::examples::dice(), 25000, 8, dk::Sheets::all_mirrored);
    std::set<int> classes;
    for (const auto& pt : cloud.points) {
        std::array<Vector3d, 3> xi;
        for (std::size_t j = 0; j < 3; ++j) xi[j] = static_cast<double>(pt.signs[j]) * pt.contributions[j];
        classes.insert(dk::classify_dice_point(xi).index());
    }
    return {cloud.size() >= 100000 && classes.size() == 32,
            std::to_string(cloud.size()) + " samples, " + std::to_string(classes.size()) + " classes"};
}

Outcome c9_membership() {
    const std::vector<dk::Discotope> bodies{dk::examples::dice(), dk::perturbed(dk::examples::quartic_020(), 0.25, 2)};
    std::mt19937_64 gen(9);
    std::size_t wrong = 0, unverified = 0, stalled = 0, max_iter = 0;
    for (int k = 0; k < 200; ++k) {
        const auto& dt = bodies[k % bodies.size()];
        const auto u = dk::Direction(dk::random_unit_vector(gen, 3));
        const VectorXd b = dk::gradient_support(dt, u);
        for (double s : {0.9, 1.0, 1.1}) {
            try {
                const auto r = dk::project(dt, s * b);
                max_iter = std::max(max_iter, r.iterations);
                const bool want_inside = s <= 1.0;
                if (r.inside() != want_inside) ++wrong;
                if (!r.inside()) {
                    const auto& sep = std::get<dk::SeparatingDirection>(r.certificate);
                    if (!(sep.u.dot(s * b) - dk::support_raw(dt, sep.u) > 1e-8)) ++unverified;
                }
            } catch (const dk::NotConverged&) {
                ++stalled;
            }
        }
    }
    return {wrong == 0 && unverified == 0 && stalled == 0,
            "600 projections, " + std::to_string(wrong) + " misclassified, " + std::to_string(stalled) + " stalled, " +
                std::to_string(unverified) + " unverified separations, max iterations " + std::to_string(max_iter)};
}

Outcome c10_vieta() {
    std::mt19937_64 gen(10);
    std::normal_distribution<double> g(0.0, 2.0);
    double worst = 0.0;
    std::size_t done = 0;
    while (done < 10000) {
        const double t1 = g(gen), t2 = g(gen);
        const auto sol = dk::solve_t3(t1, t2);
        const auto* r = std::get_if<dk::TwoRoots>(&sol);
        if (!r) continue;
        worst = std::max(worst, std::abs(r->minus * r->plus + 1.0));
        ++done;
    }
    return {worst <= 1e-10, "max |t3- t3+ + 1| = " + sci(worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"dice surface degree 24 with 455 terms", c1_dice},
        {"(0,2,0) quartic matches the known equation", c2_quartic},
        {"R^4 quartic matches the known equation", c3_r4_quartic},
        {"R^6 join samples satisfy the four generators", c4_join},
        {"planar degree law N 2^N", c5_planar},
        {"degree bound attained on generic instances", c6_degree_bound},
        {"rank defect of M on critical samples", c7_rank_defect},
        {"dice critical configurations fill 32 regions", c8_regions},
        {"membership oracle on scaled boundary probes", c9_membership},
        {"Vieta product of the t3 roots", c10_vieta}};
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("criterion %2zu %s  %s (%.1f s): %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                    secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
