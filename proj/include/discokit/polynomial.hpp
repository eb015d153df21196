#pragma once

#include "core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace discokit {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

/// Graded lexicographic order: total degree first, then lexicographically
/// larger exponent vectors (x1-heavier) earlier within a degree.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

enum class Parity { none, even_total, even_each };

inline std::string to_string(Parity p) {
    switch (p) {
        case Parity::none: return "none";
        case Parity::even_total: return "even-total";
        case Parity::even_each: return "even-each";
    }
    return "none";
}

inline Parity parse_parity(const std::string& s) {
    if (s == "none") return Parity::none;
    if (s == "even-total" || s == "even_total") return Parity::even_total;
    if (s == "even-each" || s == "even_each") return Parity::even_each;
    throw InvalidInput("unknown parity '" + s + "' (expected none, even-total or even-each)");
}

struct MonomialBasis {
    int dim = 0;
    int degree = 0;
    Parity parity = Parity::none;
    std::vector<Exponent> exponents;

    std::size_t size() const noexcept { return exponents.size(); }
};

namespace detail {
inline void compositions(int dim, int deg, std::vector<Exponent>& out) {
    // All exponents of length dim with sum deg, x1-heavier first.
    Exponent e(static_cast<std::size_t>(dim), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == dim - 1) {
            e[static_cast<std::size_t>(pos)] = left;
            out.push_back(e);
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, deg);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace detail

inline MonomialBasis monomial_basis(int dim, int degree, Parity parity) {
    if (dim < 1) throw InvalidInput("monomial basis needs dim >= 1");
    if (degree < 0) throw InvalidInput("monomial basis needs degree >= 0");
    MonomialBasis b{dim, degree, parity, {}};
    for (int k = 0; k <= degree; ++k) {
        if (parity != Parity::none && k % 2 != 0) continue;
        if (parity == Parity::even_each) {
            std::vector<Exponent> half;
            detail::compositions(dim, k / 2, half);
            for (auto& e : half) {
                for (int& v : e) v *= 2;
                b.exponents.push_back(std::move(e));
            }
        } else {
            detail::compositions(dim, k, b.exponents);
        }
    }
    return b;
}

/// Closed-form size of monomial_basis(dim, degree, parity).
inline std::uint64_t monomial_count(int dim, int degree, Parity parity) {
    const auto n = static_cast<std::uint64_t>(dim);
    switch (parity) {
        case Parity::none: return detail::binomial(static_cast<std::uint64_t>(degree) + n, n);
        case Parity::even_each: return detail::binomial(static_cast<std::uint64_t>(degree / 2) + n, n);
        case Parity::even_total: {
            std::uint64_t c = 0;
            for (int k = 0; k <= degree; k += 2) c += detail::binomial(static_cast<std::uint64_t>(k) + n - 1, n - 1);
            return c;
        }
    }
    return 0;
}

/// Sparse polynomial in grlex order with fit metadata.
struct ImplicitPolynomial {
    int dim = 0;
    std::map<Exponent, double, GrlexLess> terms;
    Parity parity = Parity::none;
    double fit_residual = 0.0;
    /// Per-coordinate scale used while fitting (empty when not fitted).
    VectorXd scale;

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms)
            if (c != 0.0) d = std::max(d, discokit::total_degree(e));
        return d;
    }

    double max_abs_coef() const {
        double m = 0.0;
        for (const auto& [e, c] : terms) m = std::max(m, std::abs(c));
        return m;
    }

    double coef(const Exponent& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? 0.0 : it->second;
    }

    /// Unit Euclidean norm, first term (grlex) above rel * max|c| positive.
    void normalize(double rel = 1e-8) {
        double n2 = 0.0;
        for (const auto& [e, c] : terms) n2 += c * c;
        if (n2 == 0.0) return;
        const double n = std::sqrt(n2);
        for (auto& [e, c] : terms) c /= n;
        const double cut = rel * max_abs_coef();
        for (const auto& [e, c] : terms) {
            if (std::abs(c) > cut) {
                if (c < 0)
                    for (auto& [e2, c2] : terms) c2 = -c2;
                break;
            }
        }
    }

    /// Drops coefficients with |c| <= rel * max|c|.
    ImplicitPolynomial pruned(double rel) const {
        ImplicitPolynomial p = *this;
        const double cut = rel * max_abs_coef();
        std::erase_if(p.terms, [cut](const auto& kv) { return std::abs(kv.second) <= cut; });
        return p;
    }
};

inline std::size_t count_terms(const ImplicitPolynomial& p, double rel_threshold = 1e-8) {
    const double cut = rel_threshold * p.max_abs_coef();
    std::size_t n = 0;
    for (const auto& [e, c] : p.terms)
        if (std::abs(c) > cut) ++n;
    return n;
}

namespace detail {

/// Neumaier-compensated running sum.
template <typename T>
struct CompensatedSum {
    T sum{};
    T comp{};

    void add(T v) {
        const T t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    T value() const { return sum + comp; }
};

template <typename S>
std::vector<std::vector<S>> power_table(const ImplicitPolynomial& p, const VectorX<S>& x) {
    if (x.size() != p.dim) throw InvalidInput("point has dimension " + std::to_string(x.size()) + ", polynomial has " +
                                              std::to_string(p.dim));
    int max_e = 0;
    for (const auto& [e, c] : p.terms)
        for (int v : e) max_e = std::max(max_e, v);
    std::vector<std::vector<S>> pw(static_cast<std::size_t>(p.dim), std::vector<S>(static_cast<std::size_t>(max_e) + 1));
    for (Index i = 0; i < p.dim; ++i) {
        auto& row = pw[static_cast<std::size_t>(i)];
        row[0] = S(1.0);
        for (int k = 1; k <= max_e; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] * x(i);
    }
    return pw;
}

template <typename S>
S monomial_value(const std::vector<std::vector<S>>& pw, const Exponent& e) {
    S m(1.0);
    for (std::size_t i = 0; i < e.size(); ++i) m *= pw[i][static_cast<std::size_t>(e[i])];
    return m;
}

}  // namespace detail

inline double evaluate(const ImplicitPolynomial& p, const VectorXd& x) {
    const auto pw = detail::power_table(p, x);
    detail::CompensatedSum<double> s;
    for (const auto& [e, c] : p.terms) s.add(c * detail::monomial_value(pw, e));
    return s.value();
}

inline Complex evaluate(const ImplicitPolynomial& p, const VectorX<Complex>& x) {
    const auto pw = detail::power_table(p, x);
    detail::CompensatedSum<double> re, im;
    for (const auto& [e, c] : p.terms) {
        const Complex v = c * detail::monomial_value(pw, e);
        re.add(v.real());
        im.add(v.imag());
    }
    return {re.value(), im.value()};
}

/// sum |c_e| |x^e|: the natural size against which a residual is judged.
template <SampleScalar S>
double evaluate_scale(const ImplicitPolynomial& p, const VectorX<S>& x) {
    const auto pw = detail::power_table(p, x);
    double s = 0.0;
    for (const auto& [e, c] : p.terms) s += std::abs(c) * std::abs(detail::monomial_value(pw, e));
    return s;
}

/// |p(x)| / evaluate_scale(p, x), zero when the scale vanishes.
template <SampleScalar S>
double relative_residual(const ImplicitPolynomial& p, const VectorX<S>& x) {
    const double scale = evaluate_scale(p, x);
    return scale == 0.0 ? 0.0 : std::abs(evaluate(p, x)) / scale;
}

/// Max coefficient-wise difference after normalizing both polynomials.
inline double coefficient_distance(ImplicitPolynomial a, ImplicitPolynomial b) {
    a.normalize();
    b.normalize();
    double m = 0.0;
    for (const auto& [e, c] : a.terms) m = std::max(m, std::abs(c - b.coef(e)));
    for (const auto& [e, c] : b.terms)
        if (!a.terms.contains(e)) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace discokit
