#pragma once

#include "critical_locus.hpp"
#include "polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

namespace discokit::io {

using nlohmann::json;

/// Input that failed to parse or validate; the message names the line or field.
class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

inline std::string config_hash(const json& config) { return hex64(fnv1a(config.dump())); }

/// Shortest decimal that reads back to the same double.
inline std::string format_double(double v) {
    char buf[32];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

inline json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
}

inline const json& field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw ParseError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + "." + key + ": missing field");
    return *it;
}

inline double number(const json& v, const std::string& path) {
    if (!v.is_number()) throw ParseError(path + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ParseError(path + ": non-finite number");
    return x;
}

inline long integer(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ParseError(path + ": expected an integer");
    return v.get<long>();
}

}  // namespace detail

// ---- discotope specs ----------------------------------------------------

inline Discotope discotope_from_json(const json& j, const std::string& source = "spec") {
    const long d = detail::integer(detail::field(j, "ambient_dim", source), source + ".ambient_dim");
    if (d < 1) throw ParseError(source + ".ambient_dim: must be positive");
    const json& discs = detail::field(j, "discs", source);
    if (!discs.is_array() || discs.empty()) throw ParseError(source + ".discs: expected a non-empty array");
    std::vector<Disc> out;
    for (std::size_t k = 0; k < discs.size(); ++k) {
        const std::string dp = source + ".discs[" + std::to_string(k) + "]";
        const json& basis = detail::field(discs[k], "basis", dp);
        const std::string bp = dp + ".basis";
        if (!basis.is_array() || basis.empty()) throw ParseError(bp + ": expected a non-empty array of columns");
        MatrixXd m(d, static_cast<Index>(basis.size()));
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const std::string cp = bp + "[" + std::to_string(c) + "]";
            if (!basis[c].is_array()) throw ParseError(cp + ": expected a column array");
            if (basis[c].size() != static_cast<std::size_t>(d))
                throw ParseError(cp + ": column has " + std::to_string(basis[c].size()) + " entries, ambient_dim is " +
                                 std::to_string(d));
            for (std::size_t r = 0; r < basis[c].size(); ++r)
                m(static_cast<Index>(r), static_cast<Index>(c)) =
                    detail::number(basis[c][r], cp + "[" + std::to_string(r) + "]");
        }
        try {
            out.emplace_back(std::move(m));
        } catch (const InvalidInput& e) {
            throw ParseError(dp + ": " + e.what());
        }
    }
    return Discotope(std::move(out));
}

inline json discotope_to_json(const Discotope& dt) {
    json discs = json::array();
    for (const auto& D : dt.discs()) {
        json cols = json::array();
        for (Index c = 0; c < D.dim(); ++c) {
            json col = json::array();
            for (Index r = 0; r < D.ambient_dim(); ++r) col.push_back(D.basis()(r, c));
            cols.push_back(std::move(col));
        }
        discs.push_back({{"basis", std::move(cols)}});
    }
    return {{"ambient_dim", dt.ambient_dim()}, {"discs", std::move(discs)}};
}

inline Discotope read_discotope(const std::string& path) {
    return discotope_from_json(detail::parse_json(read_file(path), path), path);
}

// ---- polynomials --------------------------------------------------------

inline json polynomial_to_json(const ImplicitPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms) terms.push_back({{"exp", e}, {"coef", c}});
    json j = {{"dim", p.dim},
              {"degree", p.total_degree()},
              {"terms", std::move(terms)},
              {"residual", p.fit_residual},
              {"ordering", "grlex"},
              {"parity", to_string(p.parity)}};
    if (p.scale.size() > 0) j["scale"] = std::vector<double>(p.scale.data(), p.scale.data() + p.scale.size());
    return j;
}

inline ImplicitPolynomial polynomial_from_json(const json& j, const std::string& source = "polynomial") {
    ImplicitPolynomial p;
    p.dim = static_cast<int>(detail::integer(detail::field(j, "dim", source), source + ".dim"));
    if (p.dim < 1) throw ParseError(source + ".dim: must be positive");
    if (j.contains("ordering") && j["ordering"] != "grlex") throw ParseError(source + ".ordering: only grlex is supported");
    const json& terms = detail::field(j, "terms", source);
    if (!terms.is_array()) throw ParseError(source + ".terms: expected an array");
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string tp = source + ".terms[" + std::to_string(k) + "]";
        const json& ej = detail::field(terms[k], "exp", tp);
        if (!ej.is_array() || ej.size() != static_cast<std::size_t>(p.dim))
            throw ParseError(tp + ".exp: expected " + std::to_string(p.dim) + " exponents");
        Exponent e;
        for (std::size_t i = 0; i < ej.size(); ++i) {
            const long v = detail::integer(ej[i], tp + ".exp[" + std::to_string(i) + "]");
            if (v < 0) throw ParseError(tp + ".exp[" + std::to_string(i) + "]: negative exponent");
            e.push_back(static_cast<int>(v));
        }
        const double c = detail::number(detail::field(terms[k], "coef", tp), tp + ".coef");
        if (!p.terms.emplace(std::move(e), c).second) throw ParseError(tp + ": duplicate exponent");
    }
    if (j.contains("residual")) p.fit_residual = detail::number(j["residual"], source + ".residual");
    if (j.contains("parity")) p.parity = parse_parity(j["parity"].get<std::string>());
    if (j.contains("scale")) {
        const auto& s = j["scale"];
        p.scale.resize(static_cast<Index>(s.size()));
        for (std::size_t i = 0; i < s.size(); ++i)
            p.scale(static_cast<Index>(i)) = detail::number(s[i], source + ".scale[" + std::to_string(i) + "]");
    }
    return p;
}

inline ImplicitPolynomial read_polynomial(const std::string& path) {
    return polynomial_from_json(detail::parse_json(read_file(path), path), path);
}

// ---- sample clouds ------------------------------------------------------

inline std::string sigma_string(const std::vector<int>& s) {
    std::string out;
    for (int v : s) out += v > 0 ? '+' : '-';
    return out;
}

inline std::vector<int> parse_sigma(const std::string& s, const std::string& where) {
    std::vector<int> out;
    for (char c : s) {
        if (c == '+') out.push_back(1);
        else if (c == '-') out.push_back(-1);
        else throw ParseError(where + ": sign pattern must consist of '+' and '-'");
    }
    return out;
}

template <SampleScalar S>
std::string cloud_to_csv(const SampleCloud<S>& cloud, const std::string& header_comment) {
    std::ostringstream out;
    if (!header_comment.empty()) out << "# " << header_comment << '\n';
    const Index d = cloud.dim;
    std::vector<std::string> cols;
    for (Index i = 1; i <= d; ++i) cols.push_back("x" + std::to_string(i));
    if constexpr (is_complex_v<S>)
        for (Index i = 1; i <= d; ++i) cols.push_back("x" + std::to_string(i) + "_im");
    for (Index i = 1; i <= d; ++i) cols.push_back("u" + std::to_string(i));
    if constexpr (is_complex_v<S>)
        for (Index i = 1; i <= d; ++i) cols.push_back("u" + std::to_string(i) + "_im");
    cols.push_back("sigma");
    cols.push_back("sheet_id");
    for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
    out << '\n';
    auto put = [&](const VectorX<S>& v, bool imag) {
        for (Index i = 0; i < d; ++i) {
            double val = 0.0;
            if (i < v.size()) {
                if constexpr (is_complex_v<S>) val = imag ? v(i).imag() : v(i).real();
                else val = v(i);
            }
            out << format_double(val) << ',';
        }
    };
    for (const auto& p : cloud.points) {
        put(p.x, false);
        if constexpr (is_complex_v<S>) put(p.x, true);
        put(p.direction, false);
        if constexpr (is_complex_v<S>) put(p.direction, true);
        out << sigma_string(p.signs) << ',' << p.sheet << '\n';
    }
    return out.str();
}

template <SampleScalar S>
json cloud_to_json(const SampleCloud<S>& cloud) {
    auto vec = [](const VectorX<S>& v) {
        json a = json::array();
        for (Index i = 0; i < v.size(); ++i) {
            if constexpr (is_complex_v<S>) a.push_back({v(i).real(), v(i).imag()});
            else a.push_back(v(i));
        }
        return a;
    };
    json pts = json::array();
    for (const auto& p : cloud.points) {
        json contrib = json::array();
        for (const auto& c : p.contributions) contrib.push_back(vec(c));
        pts.push_back({{"x", vec(p.x)},
                       {"u", vec(p.direction)},
                       {"sigma", p.signs},
                       {"sheet_id", p.sheet},
                       {"contributions", std::move(contrib)}});
    }
    return {{"dim", cloud.dim}, {"field", is_complex_v<S> ? "complex" : "real"}, {"points", std::move(pts)}};
}

/// A cloud read back from disk; complex when the file carries imaginary parts.
struct LoadedCloud {
    bool complex = false;
    RealCloud real;
    ComplexCloud cplx;

    std::size_t size() const { return complex ? cplx.size() : real.size(); }
    Index dim() const { return complex ? cplx.dim : real.dim; }
};

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, ',')) out.push_back(cur);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline LoadedCloud cloud_from_csv(const std::string& text, const std::string& source = "cloud") {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        header = split_csv(line);
        break;
    }
    if (header.empty()) throw ParseError(source + ": missing CSV header");
    Index d = 0;
    while (std::find(header.begin(), header.end(), "x" + std::to_string(d + 1)) != header.end()) ++d;
    if (d == 0) throw ParseError(source + ":" + std::to_string(lineno) + ": header has no x1 column");
    auto col = [&](const std::string& name) -> long {
        auto it = std::find(header.begin(), header.end(), name);
        return it == header.end() ? -1 : static_cast<long>(it - header.begin());
    };
    LoadedCloud out;
    out.complex = col("x1_im") >= 0;
    out.real.dim = out.cplx.dim = d;
    const long sigma_col = col("sigma"), sheet_col = col("sheet_id");
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_csv(line);
        const std::string where = source + ":" + std::to_string(lineno);
        if (f.size() != header.size())
            throw ParseError(where + ": expected " + std::to_string(header.size()) + " fields, got " +
                             std::to_string(f.size()));
        auto num = [&](long c, const std::string& name) {
            if (c < 0) return 0.0;
            const std::string& s = f[static_cast<std::size_t>(c)];
            char* end = nullptr;
            const double v = std::strtod(s.c_str(), &end);
            if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
                throw ParseError(where + ": field " + name + " is not a finite number");
            return v;
        };
        std::vector<int> sigma;
        std::size_t sheet = 0;
        if (sigma_col >= 0) sigma = parse_sigma(f[static_cast<std::size_t>(sigma_col)], where);
        if (sheet_col >= 0) sheet = static_cast<std::size_t>(num(sheet_col, "sheet_id"));
        if (out.complex) {
            SamplePoint<Complex> p;
            p.x.resize(d);
            p.direction.resize(d);
            for (Index i = 1; i <= d; ++i) {
                const std::string k = std::to_string(i);
                p.x(i - 1) = {num(col("x" + k), "x" + k), num(col("x" + k + "_im"), "x" + k + "_im")};
                p.direction(i - 1) = {num(col("u" + k), "u" + k), num(col("u" + k + "_im"), "u" + k + "_im")};
            }
            p.signs = sigma;
            p.sheet = sheet;
            out.cplx.points.push_back(std::move(p));
        } else {
            SamplePoint<double> p;
            p.x.resize(d);
            p.direction.resize(d);
            for (Index i = 1; i <= d; ++i) {
                const std::string k = std::to_string(i);
                p.x(i - 1) = num(col("x" + k), "x" + k);
                p.direction(i - 1) = num(col("u" + k), "u" + k);
            }
            p.signs = sigma;
            p.sheet = sheet;
            out.real.points.push_back(std::move(p));
        }
    }
    return out;
}

inline LoadedCloud cloud_from_json(const json& j, const std::string& source = "cloud") {
    LoadedCloud out;
    const Index d = detail::integer(detail::field(j, "dim", source), source + ".dim");
    out.complex = j.value("field", "real") == "complex";
    out.real.dim = out.cplx.dim = d;
    const json& pts = detail::field(j, "points", source);
    if (!pts.is_array()) throw ParseError(source + ".points: expected an array");
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const std::string pp = source + ".points[" + std::to_string(k) + "]";
        const json& x = detail::field(pts[k], "x", pp);
        if (!x.is_array() || x.size() != static_cast<std::size_t>(d))
            throw ParseError(pp + ".x: expected " + std::to_string(d) + " coordinates");
        if (out.complex) {
            SamplePoint<Complex> p;
            p.x.resize(d);
            for (Index i = 0; i < d; ++i) {
                const std::string ip = pp + ".x[" + std::to_string(i) + "]";
                const json& z = x[static_cast<std::size_t>(i)];
                if (!z.is_array() || z.size() != 2) throw ParseError(ip + ": expected [re, im]");
                p.x(i) = {detail::number(z[0], ip), detail::number(z[1], ip)};
            }
            out.cplx.points.push_back(std::move(p));
        } else {
            SamplePoint<double> p;
            p.x.resize(d);
            for (Index i = 0; i < d; ++i)
                p.x(i) = detail::number(x[static_cast<std::size_t>(i)], pp + ".x[" + std::to_string(i) + "]");
            out.real.points.push_back(std::move(p));
        }
    }
    return out;
}

/// Reads a cloud by content: JSON when the first non-comment character is '{'.
inline LoadedCloud read_cloud(const std::string& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return cloud_from_json(detail::parse_json(text, path), path);
    return cloud_from_csv(text, path);
}

}  // namespace discokit::io
