#include <discokit.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace dk = discokit;
using dk::io::json;

namespace {

enum Exit { ok = 0, negative = 1, usage = 2, precondition = 3, numerical = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_vector(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        while (end && *end == ' ') ++end;
        if (item.empty() || *end != '\0' || !std::isfinite(v))
            throw UsageError(std::string("malformed ") + what + " '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

dk::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const dk::VectorXd>(v.data(), static_cast<dk::Index>(v.size()));
}

json vec_json(const dk::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

void log_config(const json& cfg) { std::cerr << cfg.dump() << '\n'; }

std::string header_line(const json& cfg) {
    return std::string("discokit ") + dk::version + " config=" + dk::io::config_hash(cfg);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

/// Resolved flags minus the output location, which does not affect content.
json hashed(json cfg) {
    cfg.erase("out");
    return cfg;
}

int run_support(const std::string& spec, const std::string& direction) {
    json cfg = {{"command", "support"}, {"spec", spec}, {"direction", direction}};
    log_config(cfg);
    const dk::Discotope dt = dk::io::read_discotope(spec);
    const dk::VectorXd raw = to_eigen(parse_vector(direction, "direction"));
    if (raw.size() != dt.ambient_dim())
        throw UsageError("direction has " + std::to_string(raw.size()) + " entries, ambient dimension is " +
                         std::to_string(dt.ambient_dim()));
    const dk::Direction u = dk::Direction::normalized(raw);
    const auto face = dk::face_of_direction(dt, u);
    json out = {{"h", dk::support_discotope(dt, u)}, {"direction", vec_json(u.vec())}};
    json flat = json::array();
    for (auto j : face.flat_indices) flat.push_back(j + 1);
    out["face"] = {{"flat_discs", flat}, {"face_dim", face.face_dim}, {"point_part", vec_json(face.point_part)}};
    if (face.is_point()) {
        out["gradient"] = vec_json(dk::gradient_support(dt, u));
        out["multi_exposed"] = dk::multi_exposure_test(dt, u);
    }
    std::cout << out.dump(2) << '\n';
    return ok;
}

struct SampleArgs {
    std::string spec, out, sheets = "all", format = "csv", field = "real";
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    bool join = false;
};

template <typename Cloud>
std::string render_cloud(const Cloud& cloud, const SampleArgs& a, const json& cfg) {
    if (a.format == "json") {
        json j = dk::io::cloud_to_json(cloud);
        j["meta"] = {{"tool", std::string("discokit ") + dk::version}, {"config_hash", dk::io::config_hash(hashed(cfg))}};
        return j.dump() + "\n";
    }
    return dk::io::cloud_to_csv(cloud, header_line(hashed(cfg)));
}

int run_sample(const SampleArgs& a) {
    json cfg = {{"command", "sample"}, {"spec", a.spec},     {"count", a.count},   {"seed", a.seed},
                {"sheets", a.sheets},  {"format", a.format}, {"field", a.field},   {"join", a.join},
                {"out", a.out}};
    log_config(cfg);
    const dk::Discotope dt = dk::io::read_discotope(a.spec);
    if (a.join) {
        if (a.field != "real") throw UsageError("join sampling is real only");
        write_output(a.out, render_cloud(dk::sample_join(dt, a.count, a.seed), a, cfg));
        return ok;
    }
    const dk::Sheets sheets = a.sheets == "boundary" ? dk::Sheets::boundary
                              : a.sheets == "all"    ? dk::Sheets::all
                                                     : dk::Sheets::all_mirrored;
    if (a.field == "complex")
        write_output(a.out, render_cloud(dk::sample_S<dk::Complex>(dt, a.count, a.seed, sheets), a, cfg));
    else
        write_output(a.out, render_cloud(dk::sample_S<double>(dt, a.count, a.seed, sheets), a, cfg));
    return ok;
}

struct ImplicitizeArgs {
    std::string cloud, out, parity = "none";
    int max_degree = 24;
    double tol = 1e-8;
    double term_threshold = 1e-8;
};

int run_implicitize(const ImplicitizeArgs& a) {
    json cfg = {{"command", "implicitize"}, {"cloud", a.cloud}, {"max_degree", a.max_degree}, {"parity", a.parity},
                {"tol", a.tol}, {"term_threshold", a.term_threshold}, {"out", a.out}};
    log_config(cfg);
    const auto loaded = dk::io::read_cloud(a.cloud);
    dk::FitOptions fo;
    fo.svd_tol = a.tol;
    const dk::Parity parity = dk::parse_parity(a.parity);
    const dk::DegreeSearch s = loaded.complex ? dk::find_degree(loaded.cplx, a.max_degree, parity, fo)
                                              : dk::find_degree(loaded.real, a.max_degree, parity, fo);
    if (!s.degree) {
        if (!s.trace.empty()) {
            if (const auto* amb = std::get_if<dk::AmbiguousNullspace>(&s.trace.back().second)) {
                std::cout << "ambiguous nullspace at degree " << s.trace.back().first << " (dimension "
                          << amb->null_dim << ")\n";
                return numerical;
            }
        }
        std::cout << "no equation up to degree " << a.max_degree << '\n';
        return negative;
    }
    const auto& p = *s.polynomial;
    if (!a.out.empty()) {
        json j = dk::io::polynomial_to_json(p);
        j["meta"] = {{"tool", std::string("discokit ") + dk::version}, {"config_hash", dk::io::config_hash(hashed(cfg))}};
        write_output(a.out, j.dump(1) + "\n");
    }
    std::cout << "degree=" << *s.degree << " terms=" << dk::count_terms(p, a.term_threshold)
              << " residual=" << dk::io::format_double(p.fit_residual) << '\n';
    return ok;
}

int run_member(const std::string& spec, const std::string& point, double tol, std::size_t max_iter) {
    json cfg = {{"command", "member"}, {"spec", spec}, {"point", point}, {"tol", tol}, {"max_iter", max_iter}};
    log_config(cfg);
    const dk::Discotope dt = dk::io::read_discotope(spec);
    const dk::VectorXd p = to_eigen(parse_vector(point, "point"));
    if (p.size() != dt.ambient_dim())
        throw UsageError("point has " + std::to_string(p.size()) + " entries, ambient dimension is " +
                         std::to_string(dt.ambient_dim()));
    dk::ProjectOptions po;
    po.tol = tol;
    po.max_iter = max_iter;
    const dk::MembershipReport r = dk::project(dt, p, po);
    json out = {{"point", vec_json(p)},
                {"verdict", r.inside() ? "inside" : "outside"},
                {"distance_estimate", r.distance_estimate},
                {"iterations", r.iterations},
                {"final_gap", r.final_gap}};
    if (const auto* sep = std::get_if<dk::SeparatingDirection>(&r.certificate)) {
        out["separating_direction"] = vec_json(sep->u);
        out["violation"] = sep->violation;
    } else {
        out["nearest"] = vec_json(r.nearest);
    }
    std::cout << out.dump(2) << '\n';
    return r.inside() ? ok : negative;
}

int run_verify(const std::string& name, std::uint64_t seed, std::size_t count) {
    json cfg = {{"command", "verify"}, {"fixture", name}, {"seed", seed}, {"count", count}};
    log_config(cfg);
    const auto fx = dk::find_fixture(name);
    if (!fx) {
        std::cerr << "unknown fixture '" << name << "'; available:";
        for (const auto& n : dk::fixture_names()) std::cerr << ' ' << n;
        std::cerr << '\n';
        return usage;
    }
    dk::VerifyOptions vo;
    vo.seed = seed;
    vo.count = count;
    const auto rep = dk::verify_fixture(*fx, vo);
    for (const auto& c : rep.checks) std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    std::cout << (rep.pass() ? "verify " + name + ": pass" : "verify " + name + ": FAIL") << '\n';
    return rep.pass() ? ok : negative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discotope toolkit: support functions, sampling, implicitization, membership"};
    app.set_version_flag("--version", std::string(dk::version));
    app.require_subcommand(1);

    std::string spec, direction, point;
    auto* support = app.add_subcommand("support", "support function, exposed point and face for a direction");
    support->add_option("--spec", spec, "discotope JSON")->required();
    support->add_option("-u,--direction", direction, "comma-separated direction (normalized)")->required();

    SampleArgs sa;
    auto* sample = app.add_subcommand("sample", "sample the nonlinear boundary part S");
    sample->add_option("--spec", sa.spec, "discotope JSON")->required();
    sample->add_option("--count", sa.count, "directions (or join samples)")->capture_default_str();
    sample->add_option("--seed", sa.seed, "64-bit seed")->capture_default_str();
    sample->add_option("--sheets", sa.sheets, "boundary | all | all-mirrored")
        ->check(CLI::IsMember({"boundary", "all", "all-mirrored"}))
        ->capture_default_str();
    sample->add_option("--format", sa.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sample->add_option("--field", sa.field, "real | complex")->check(CLI::IsMember({"real", "complex"}))->capture_default_str();
    sample->add_flag("--join", sa.join, "sum independent boundary points (reverse condition)");
    sample->add_option("--out", sa.out, "output file (default stdout)");

    ImplicitizeArgs ia;
    auto* impl = app.add_subcommand("implicitize", "fit the lowest-degree implicit equation to a cloud");
    impl->add_option("--cloud", ia.cloud, "cloud CSV or JSON")->required();
    impl->add_option("--max-degree", ia.max_degree, "largest degree tried")->capture_default_str();
    impl->add_option("--parity", ia.parity, "none | even-total | even-each")
        ->check(CLI::IsMember({"none", "even-total", "even-each"}))
        ->capture_default_str();
    impl->add_option("--tol", ia.tol, "relative singular-value threshold")->capture_default_str();
    impl->add_option("--term-threshold", ia.term_threshold, "relative coefficient threshold for term counts")
        ->capture_default_str();
    impl->add_option("--out", ia.out, "polynomial JSON output");

    double member_tol = 1e-6;
    std::size_t max_iter = 50000;
    auto* member = app.add_subcommand("member", "decide membership with a certificate");
    member->add_option("--spec", spec, "discotope JSON")->required();
    member->add_option("--point", point, "comma-separated point")->required();
    member->add_option("--tol", member_tol, "inside tolerance")->capture_default_str();
    member->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();

    std::string fixture;
    std::uint64_t verify_seed = 1;
    std::size_t verify_count = 2000;
    auto* verify = app.add_subcommand("verify", "run a bundled example end to end");
    verify->add_option("fixture", fixture, "fixture name")->required();
    verify->add_option("--seed", verify_seed, "64-bit seed")->capture_default_str();
    verify->add_option("--count", verify_count, "critical directions or join samples")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*support) return run_support(spec, direction);
        if (*sample) return run_sample(sa);
        if (*impl) return run_implicitize(ia);
        if (*member) return run_member(spec, point, member_tol, max_iter);
        if (*verify) return run_verify(fixture, verify_seed, verify_count);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const dk::io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const dk::ConditionViolated& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return precondition;
    } catch (const dk::NotTwoDiscs& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return precondition;
    } catch (const dk::DegenerateDirection& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return precondition;
    } catch (const dk::ZeroDirection& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const dk::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const dk::InsufficientSamples& e) {
        std::cerr << "numerical: " << e.what() << '\n';
        return numerical;
    } catch (const dk::Error& e) {
        std::cerr << "numerical: " << e.what() << '\n';
        return numerical;
    }
    return usage;
}
