#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <alphacert/linalg.hpp>
#include <alphacert/rational.hpp>

namespace alphacert {

struct Term {
    std::vector<unsigned> exps;
    GaussianRational coeff;

    unsigned total_degree() const {
        unsigned d = 0;
        for (unsigned e : exps)
            d += e;
        return d;
    }
};

// Graded lexicographic on exponent vectors, descending. Any fixed total
// order would do; this one matches the documented monomial order of the
// curve file format.
inline bool grlex_greater(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned da = 0, db = 0;
    for (unsigned e : a)
        da += e;
    for (unsigned e : b)
        db += e;
    if (da != db)
        return da > db;
    return a > b;
}

// Sparse multivariate polynomial over Gaussian rationals. Canonical form:
// terms sorted grlex-descending, no duplicate exponent vectors, no zero
// coefficients.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    Polynomial(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
        for (auto& t : terms) {
            if (t.exps.size() != nvars_)
                throw DimensionMismatch("term exponent vector length differs from variable count");
            add_term(std::move(t));
        }
        normalize();
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Max total degree of stored terms; 0 for the zero polynomial.
    unsigned degree() const { return degree_; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].exps != b.terms_[i].exps || !(a.terms_[i].coeff == b.terms_[i].coeff))
                return false;
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_)
            throw DimensionMismatch("polynomial variable counts differ");
        Polynomial out(a.nvars_);
        out.terms_ = a.terms_;
        for (const auto& t : b.terms_)
            out.add_term(t);
        out.normalize();
        return out;
    }

    Polynomial scaled(const GaussianRational& c) const {
        Polynomial out(nvars_);
        if (c.is_zero())
            return out;
        out.terms_ = terms_;
        for (auto& t : out.terms_)
            t.coeff *= c;
        out.degree_ = degree_;
        return out;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial out(nvars_);
        for (const auto& t : terms_) {
            if (t.exps[var] == 0)
                continue;
            Term d = t;
            d.coeff *= GaussianRational(Rational(t.exps[var]));
            --d.exps[var];
            out.terms_.push_back(std::move(d));
        }
        out.normalize();
        return out;
    }

    // Move every variable i to position map[i] in a polynomial with
    // new_nvars variables; map entries of npos are disallowed positions
    // (returns false if a term actually uses one).
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    bool remapped(const std::vector<std::size_t>& map, std::size_t new_nvars,
                  Polynomial& out) const {
        out = Polynomial(new_nvars);
        for (const auto& t : terms_) {
            Term nt;
            nt.exps.assign(new_nvars, 0);
            nt.coeff = t.coeff;
            for (std::size_t v = 0; v < nvars_; ++v) {
                if (t.exps[v] == 0)
                    continue;
                if (v >= map.size() || map[v] == npos)
                    return false;
                nt.exps[map[v]] += t.exps[v];
            }
            out.terms_.push_back(std::move(nt));
        }
        out.normalize();
        return true;
    }

    // Multiply by the monomial with the given exponent vector.
    Polynomial times_monomial(const std::vector<unsigned>& exps,
                              const GaussianRational& c = GaussianRational(1L)) const {
        Polynomial out(nvars_);
        if (c.is_zero())
            return out;
        for (const auto& t : terms_) {
            Term nt = t;
            for (std::size_t v = 0; v < nvars_; ++v)
                nt.exps[v] += exps[v];
            nt.coeff *= c;
            out.terms_.push_back(std::move(nt));
        }
        out.normalize();
        return out;
    }

    bool has_real_coefficients() const {
        for (const auto& t : terms_)
            if (t.coeff.im != 0)
                return false;
        return true;
    }

    // Largest exponent of each variable over all terms.
    std::vector<unsigned> max_exponents() const {
        std::vector<unsigned> m(nvars_, 0);
        for (const auto& t : terms_)
            for (std::size_t v = 0; v < nvars_; ++v)
                m[v] = std::max(m[v], t.exps[v]);
        return m;
    }

    GaussianRational evaluate(const CVector& x) const;

private:
    void add_term(Term t) { terms_.push_back(std::move(t)); }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_greater(a.exps, b.exps); });
        std::vector<Term> merged;
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().exps == t.exps)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        terms_.clear();
        for (auto& t : merged)
            if (!t.coeff.is_zero())
                terms_.push_back(std::move(t));
        degree_ = 0;
        for (const auto& t : terms_)
            degree_ = std::max(degree_, t.total_degree());
    }

    std::size_t nvars_;
    std::vector<Term> terms_;
    unsigned degree_ = 0;
};

namespace detail {

// Per-point table of variable powers shared across a system evaluation.
class PowerTable {
public:
    PowerTable(const CVector& x, const std::vector<unsigned>& max_exp) {
        pow_.resize(x.size());
        for (std::size_t v = 0; v < x.size(); ++v) {
            pow_[v].reserve(max_exp[v] + 1);
            pow_[v].push_back(GaussianRational(1L));
            for (unsigned e = 1; e <= max_exp[v]; ++e)
                pow_[v].push_back(pow_[v].back() * x[v]);
        }
    }

    GaussianRational monomial(const std::vector<unsigned>& exps) const {
        GaussianRational m(1L);
        for (std::size_t v = 0; v < exps.size(); ++v)
            if (exps[v] > 0)
                m *= pow_[v][exps[v]];
        return m;
    }

private:
    std::vector<std::vector<GaussianRational>> pow_;
};

inline GaussianRational evaluate_with(const Polynomial& p, const PowerTable& tab) {
    GaussianRational s;
    for (const auto& t : p.terms())
        s += t.coeff * tab.monomial(t.exps);
    return s;
}

} // namespace detail

inline GaussianRational Polynomial::evaluate(const CVector& x) const {
    if (x.size() != nvars_)
        throw DimensionMismatch("evaluation point dimension differs from variable count");
    detail::PowerTable tab(x, max_exponents());
    return detail::evaluate_with(*this, tab);
}

// Ordered sequence of polynomials over a common variable list. Immutable
// after construction; the derivative table is built once on first use and
// shared between copies, so concurrent evaluation is safe.
class PolynomialSystem {
public:
    PolynomialSystem() = default;
    PolynomialSystem(std::vector<std::string> vars, std::vector<Polynomial> polys)
        : vars_(std::move(vars)), polys_(std::move(polys)) {
        for (const auto& p : polys_)
            if (p.nvars() != vars_.size())
                throw DimensionMismatch("polynomial variable count differs from system");
        max_exp_.assign(vars_.size(), 0);
        for (const auto& p : polys_) {
            auto m = p.max_exponents();
            for (std::size_t v = 0; v < m.size(); ++v)
                max_exp_[v] = std::max(max_exp_[v], m[v]);
        }
    }

    std::size_t nvars() const { return vars_.size(); }
    std::size_t size() const { return polys_.size(); }
    bool is_square() const { return size() == nvars(); }
    const std::vector<std::string>& variable_names() const { return vars_; }
    const Polynomial& operator[](std::size_t i) const { return polys_[i]; }
    const std::vector<Polynomial>& polynomials() const { return polys_; }

    bool has_real_coefficients() const {
        for (const auto& p : polys_)
            if (!p.has_real_coefficients())
                return false;
        return true;
    }

    // d polys_[i] / d x_j, built lazily, write-once.
    const std::vector<std::vector<Polynomial>>& derivatives() const {
        std::call_once(cache_->once, [this] {
            cache_->d.reserve(polys_.size());
            for (const auto& p : polys_) {
                std::vector<Polynomial> row;
                row.reserve(nvars());
                for (std::size_t v = 0; v < nvars(); ++v)
                    row.push_back(p.derivative(v));
                cache_->d.push_back(std::move(row));
            }
        });
        return cache_->d;
    }

    const std::vector<unsigned>& max_exponents() const { return max_exp_; }

private:
    struct Cache {
        std::once_flag once;
        std::vector<std::vector<Polynomial>> d;
    };

    std::vector<std::string> vars_;
    std::vector<Polynomial> polys_;
    std::vector<unsigned> max_exp_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline CVector evaluate(const PolynomialSystem& f, const CVector& x) {
    if (x.size() != f.nvars())
        throw DimensionMismatch("evaluation point dimension differs from system");
    detail::PowerTable tab(x, f.max_exponents());
    CVector out;
    out.reserve(f.size());
    for (const auto& p : f.polynomials())
        out.push_back(detail::evaluate_with(p, tab));
    return out;
}

inline CMatrix jacobian(const PolynomialSystem& f, const CVector& x) {
    if (x.size() != f.nvars())
        throw DimensionMismatch("evaluation point dimension differs from system");
    const auto& d = f.derivatives();
    detail::PowerTable tab(x, f.max_exponents());
    CMatrix out(f.size(), f.nvars());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.nvars(); ++j)
            out(i, j) = detail::evaluate_with(d[i][j], tab);
    return out;
}

inline PolynomialSystem scaled(const PolynomialSystem& f, const GaussianRational& c) {
    std::vector<Polynomial> polys;
    polys.reserve(f.size());
    for (const auto& p : f.polynomials())
        polys.push_back(p.scaled(c));
    return {f.variable_names(), std::move(polys)};
}

// Sum over the system of the squared Bombieri-Weyl norms of the
// degree-d_i homogenizations: each coefficient c_a is weighted by
// a! * (d_i - |a|)! / d_i! with the homogenizing slot absorbing d_i - |a|.
inline Rational weyl_norm_sq(const PolynomialSystem& f) {
    unsigned dmax = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].degree() == 0)
            throw DegreeZeroPolynomial(i);
        dmax = std::max(dmax, f[i].degree());
    }
    std::vector<Int> fact(dmax + 1);
    fact[0] = 1;
    for (unsigned i = 1; i <= dmax; ++i)
        fact[i] = fact[i - 1] * i;

    Rational total;
    for (const auto& p : f.polynomials()) {
        unsigned d = p.degree();
        for (const auto& t : p.terms()) {
            Int w = fact[d - t.total_degree()];
            for (unsigned e : t.exps)
                w *= fact[e];
            total += abs_sq(t.coeff) * make_rational(w, fact[d]);
        }
    }
    return total;
}

} // namespace alphacert
