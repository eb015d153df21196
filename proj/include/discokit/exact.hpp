#pragma once

#include "polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <string>
#include <string_view>

namespace discokit {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial with exact rational coefficients, used for stored reference equations.
struct RationalPolynomial {
    int dim = 0;
    std::map<Exponent, Rational, GrlexLess> terms;

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms) d = std::max(d, discokit::total_degree(e));
        return d;
    }

    Rational evaluate(const std::vector<Rational>& x) const {
        if (x.size() != static_cast<std::size_t>(dim)) throw InvalidInput("point has the wrong dimension");
        Rational s = 0;
        for (const auto& [e, c] : terms) {
            Rational m = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) m *= x[i];
            s += m;
        }
        return s;
    }

    ImplicitPolynomial to_double() const {
        ImplicitPolynomial p;
        p.dim = dim;
        for (const auto& [e, c] : terms) p.terms.emplace(e, c.convert_to<double>());
        return p;
    }

    /// Multiplies through by the lcm of the denominators.
    RationalPolynomial cleared() const {
        using boost::multiprecision::cpp_int;
        cpp_int l = 1;
        for (const auto& [e, c] : terms) l = boost::multiprecision::lcm(l, denominator(c));
        RationalPolynomial out = *this;
        for (auto& [e, c] : out.terms) c *= l;
        return out;
    }
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, int dim) : s_(text), dim_(dim) {}

    RationalPolynomial parse() {
        RationalPolynomial p;
        p.dim = dim_;
        skip();
        if (at_end()) throw InvalidInput("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [e, c] = term();
            p.terms[e] += sign * c;
        }
        std::erase_if(p.terms, [](const auto& kv) { return kv.second == 0; });
        return p;
    }

private:
    std::pair<Exponent, Rational> term() {
        Rational c = 1;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = number();
            any = true;
            if (peek() == '/') {
                ++pos_;
                skip();
                c /= number();
            }
        }
        Exponent e(static_cast<std::size_t>(dim_), 0);
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                skip();
            }
            if (peek() != 'x') break;
            ++pos_;
            if (peek() == '_') ++pos_;
            const int var = static_cast<int>(integer());
            if (var < 1 || var > dim_) fail("variable index out of range");
            skip();
            int power = 1;
            if (peek() == '^') {
                ++pos_;
                skip();
                power = static_cast<int>(integer());
                skip();
            }
            e[static_cast<std::size_t>(var - 1)] += power;
            any = true;
        }
        if (!any) fail("expected a term");
        return {e, c};
    }

    Rational number() {
        const auto start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        Rational r(std::string(s_.substr(start, pos_ - start)));
        skip();
        return r;
    }

    long integer() {
        const auto start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    int dim_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses sums of terms like "3/2*x1^2*x3 - x2" (the '*' and '_' in x_1 are optional).
inline RationalPolynomial parse_polynomial(std::string_view text, int dim) {
    return detail::PolyParser(text, dim).parse();
}

}  // namespace discokit
