#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <alphacert/polynomial.hpp>

namespace alphacert {
namespace detail {

// Line-oriented reader: strips '#' comments, skips blank lines, tracks the
// current line number for diagnostics.
class LineLexer {
public:
    explicit LineLexer(std::istream& in) : in_(in) {}

    // Next non-empty line split into whitespace-separated tokens.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            tokens.clear();
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok)
                tokens.push_back(tok);
            if (!tokens.empty())
                return true;
        }
        return false;
    }

    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

inline bool looks_like_integer(const std::string& s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

inline Int parse_int(const std::string& tok, std::size_t line) {
    if (tok.empty() || !looks_like_integer(tok))
        throw ParseError(line, "expected integer, got '" + tok + "'");
    return Int(tok);
}

inline std::size_t parse_count(const std::string& tok, std::size_t line) {
    Int v = parse_int(tok, line);
    if (v < 0)
        throw ParseError(line, "expected non-negative count, got '" + tok + "'");
    return static_cast<std::size_t>(v);
}

inline Rational parse_fraction(const std::string& num_tok, const std::string& den_tok,
                               std::size_t line) {
    Int n = parse_int(num_tok, line);
    Int d = parse_int(den_tok, line);
    if (d == 0)
        throw ParseError(line, "zero denominator");
    if (d < 0)
        throw ParseError(line, "denominator must be positive");
    return make_rational(std::move(n), std::move(d));
}

} // namespace detail

// System file format:
//   line 1:            N M          (polynomial count, variable count)
//   per polynomial:    T            (term count)
//     then T lines:    re_num re_den im_num im_den e1 ... eM
// '#' starts a comment anywhere; blank lines are ignored.
inline PolynomialSystem parse_system(std::istream& in) {
    detail::LineLexer lex(in);
    std::vector<std::string> tok;
    if (!lex.next(tok))
        throw ParseError(lex.line(), "empty input, expected 'N M' header");
    if (tok.size() != 2)
        throw ParseError(lex.line(), "expected 'N M' header with two integers");
    std::size_t npolys = detail::parse_count(tok[0], lex.line());
    std::size_t nvars = detail::parse_count(tok[1], lex.line());

    std::vector<Polynomial> polys;
    polys.reserve(npolys);
    for (std::size_t p = 0; p < npolys; ++p) {
        if (!lex.next(tok))
            throw ParseError(lex.line(), "expected term count for polynomial " + std::to_string(p));
        if (tok.size() != 1)
            throw ParseError(lex.line(), "expected a single term count");
        std::size_t nterms = detail::parse_count(tok[0], lex.line());
        std::vector<Term> terms;
        terms.reserve(nterms);
        for (std::size_t t = 0; t < nterms; ++t) {
            if (!lex.next(tok))
                throw ParseError(lex.line(), "expected term line");
            if (tok.size() != 4 + nvars)
                throw ParseError(lex.line(), "term line must have 4 coefficient tokens and " +
                                                 std::to_string(nvars) + " exponents");
            Term term;
            term.coeff.re = detail::parse_fraction(tok[0], tok[1], lex.line());
            term.coeff.im = detail::parse_fraction(tok[2], tok[3], lex.line());
            term.exps.reserve(nvars);
            for (std::size_t v = 0; v < nvars; ++v) {
                Int e = detail::parse_int(tok[4 + v], lex.line());
                if (e < 0)
                    throw ParseError(lex.line(), "negative exponent");
                term.exps.push_back(static_cast<unsigned>(e));
            }
            terms.push_back(std::move(term));
        }
        polys.emplace_back(nvars, std::move(terms));
    }

    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t v = 0; v < nvars; ++v)
        names.push_back("x" + std::to_string(v + 1));
    return {std::move(names), std::move(polys)};
}

inline void serialize_system(const PolynomialSystem& f, std::ostream& out) {
    out << f.size() << ' ' << f.nvars() << '\n';
    for (const auto& p : f.polynomials()) {
        out << p.terms().size() << '\n';
        for (const auto& t : p.terms()) {
            out << num(t.coeff.re) << ' ' << den(t.coeff.re) << ' ' << num(t.coeff.im) << ' '
                << den(t.coeff.im);
            for (unsigned e : t.exps)
                out << ' ' << e;
            out << '\n';
        }
    }
}

// Points file format:
//   line 1:  K M       (point count, coordinate count)
//   then K blocks of M lines 're_num re_den im_num im_den',
//   blocks separated by blank lines.
inline std::vector<CVector> parse_points(std::istream& in) {
    detail::LineLexer lex(in);
    std::vector<std::string> tok;
    if (!lex.next(tok))
        throw ParseError(lex.line(), "empty input, expected 'K M' header");
    if (tok.size() != 2)
        throw ParseError(lex.line(), "expected 'K M' header with two integers");
    std::size_t npoints = detail::parse_count(tok[0], lex.line());
    std::size_t dim = detail::parse_count(tok[1], lex.line());

    std::vector<CVector> points;
    points.reserve(npoints);
    for (std::size_t p = 0; p < npoints; ++p) {
        CVector x;
        x.reserve(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            if (!lex.next(tok))
                throw ParseError(lex.line(), "expected coordinate line for point " +
                                                 std::to_string(p + 1));
            if (tok.size() != 4)
                throw ParseError(lex.line(), "coordinate line must have 4 integer tokens");
            GaussianRational z;
            z.re = detail::parse_fraction(tok[0], tok[1], lex.line());
            z.im = detail::parse_fraction(tok[2], tok[3], lex.line());
            x.push_back(std::move(z));
        }
        points.push_back(std::move(x));
    }
    return points;
}

inline void serialize_points(const std::vector<CVector>& points, std::size_t dim,
                             std::ostream& out) {
    out << points.size() << ' ' << dim << '\n';
    for (const auto& x : points) {
        out << '\n';
        for (const auto& z : x)
            out << num(z.re) << ' ' << den(z.re) << ' ' << num(z.im) << ' ' << den(z.im) << '\n';
    }
}

inline std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << num(r) << '/' << den(r);
    return os.str();
}

} // namespace alphacert
