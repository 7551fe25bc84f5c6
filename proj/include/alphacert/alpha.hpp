#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <alphacert/linalg.hpp>
#include <alphacert/polynomial.hpp>
#include <alphacert/rounding.hpp>

namespace alphacert {

// Everything is kept squared so all tests stay inside Q. alpha_sq_upper is
// always beta_sq * gamma_sq_upper.
struct CertBounds {
    Rational beta_sq;
    Rational gamma_sq_upper;
    Rational alpha_sq_upper;
    Rational delta_sq;
};

// Squared safe threshold for the approximate-solution test: the test
// 16*alpha^2 < T^2 with T = 157670/10^6 < (13 - 3*sqrt(17))/4 implies the
// exact condition 4*alpha < 13 - 3*sqrt(17). Conservatism can only delay a
// certificate, never produce a wrong one.
inline const Rational& item1_threshold_sq() {
    static const Rational t2 = [] {
        Rational t = make_rational(157670, 1000000);
        return Rational(t * t);
    }();
    return t2;
}

namespace detail {

inline void require_square(const PolynomialSystem& f) {
    if (!f.is_square())
        throw DimensionMismatch("system must have as many polynomials as variables");
}

inline void require_point(const PolynomialSystem& f, const CVector& x) {
    if (x.size() != f.nvars())
        throw DimensionMismatch("point dimension differs from system");
}

// One elimination serving both the Newton correction and the inverse
// columns needed by the gamma bound.
struct PointSolve {
    CVector correction;            // Df(x)^-1 f(x)
    std::vector<CVector> inverse;  // columns of Df(x)^-1
};

inline PointSolve solve_at(const PolynomialSystem& f, const CVector& x, bool want_inverse) {
    require_square(f);
    require_point(f, x);
    CMatrix J = jacobian(f, x);
    std::vector<CVector> rhs;
    rhs.push_back(evaluate(f, x));
    if (want_inverse) {
        const std::size_t n = f.nvars();
        for (std::size_t j = 0; j < n; ++j) {
            CVector e(n);
            e[j] = GaussianRational(1L);
            rhs.push_back(std::move(e));
        }
    }
    std::vector<CVector> sol;
    try {
        sol = solve_linear_multi(J, rhs);
    } catch (const SingularMatrix&) {
        throw SingularJacobian();
    }
    PointSolve out;
    out.correction = std::move(sol[0]);
    for (std::size_t j = 1; j < sol.size(); ++j)
        out.inverse.push_back(std::move(sol[j]));
    return out;
}

} // namespace detail

// N_f(x) = x - Df(x)^-1 f(x). A singular Jacobian is an error here, not a
// silent fixed point.
inline CVector newton_step(const PolynomialSystem& f, const CVector& x) {
    auto s = detail::solve_at(f, x, false);
    CVector out = x;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= s.correction[i];
    return out;
}

// ||Df(x)^-1 f(x)||^2, the squared Newton step length.
inline Rational beta_sq(const PolynomialSystem& f, const CVector& x) {
    return norm_sq(detail::solve_at(f, x, false).correction);
}

// Rational upper bound for gamma(f,x)^2 via the higher-derivative bound for
// polynomial systems:
//
//   gamma^2 <= D^3 * mu^2 / (4 * (1 + ||x||^2)),
//   mu^2 = max(1, ||f||_W^2 * ||Df(x)^-1 Delta||_F^2),
//   Delta = diag(sqrt(d_i * (1 + ||x||^2)^(d_i - 1))).
//
// The Frobenius norm dominates the operator norm, so the bound stays valid
// and fully rational: only Delta^2 is ever needed.
struct GammaContext {
    explicit GammaContext(const PolynomialSystem& f) : weyl_sq(weyl_norm_sq(f)) {
        degrees.reserve(f.size());
        for (const auto& p : f.polynomials()) {
            degrees.push_back(p.degree());
            max_degree = std::max(max_degree, p.degree());
        }
    }

    Rational weyl_sq;
    std::vector<unsigned> degrees;
    unsigned max_degree = 0;
};

namespace detail {

inline Rational gamma_sq_from_inverse(const GammaContext& ctx, const CVector& x,
                                      const std::vector<CVector>& inverse_cols) {
    Rational s = 1 + norm_sq(x);
    Rational frob_sq;
    for (std::size_t j = 0; j < inverse_cols.size(); ++j) {
        Rational weight = Rational(ctx.degrees[j]) * pow_rational(s, ctx.degrees[j] - 1);
        frob_sq += weight * norm_sq(inverse_cols[j]);
    }
    Rational mu_sq = ctx.weyl_sq * frob_sq;
    if (mu_sq < 1)
        mu_sq = 1;
    Rational d3 = Rational(ctx.max_degree) * ctx.max_degree * ctx.max_degree;
    return d3 * mu_sq / (4 * s);
}

} // namespace detail

inline Rational gamma_sq_upper(const PolynomialSystem& f, const CVector& x) {
    GammaContext ctx(f);
    auto s = detail::solve_at(f, x, true);
    return detail::gamma_sq_from_inverse(ctx, x, s.inverse);
}

// beta, gamma and alpha at one point with a single elimination; delta_sq is
// left at zero for the caller to fill in.
struct PointBounds {
    CertBounds bounds;
    CVector newton_point;
};

inline PointBounds point_bounds(const GammaContext& ctx, const PolynomialSystem& f,
                                const CVector& x) {
    auto s = detail::solve_at(f, x, true);
    PointBounds out;
    out.bounds.beta_sq = norm_sq(s.correction);
    out.bounds.gamma_sq_upper = detail::gamma_sq_from_inverse(ctx, x, s.inverse);
    out.bounds.alpha_sq_upper = out.bounds.beta_sq * out.bounds.gamma_sq_upper;
    out.newton_point = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        out.newton_point[i] -= s.correction[i];
    return out;
}

inline bool item1_holds(const CertBounds& b) {
    return 16 * b.alpha_sq_upper < item1_threshold_sq();
}

// Sufficient test that x lies in a quadratic convergence basin. False means
// "not certified", never "certified not a solution".
inline std::pair<bool, CertBounds> is_approximate_solution(const PolynomialSystem& f,
                                                           const CVector& x) {
    GammaContext ctx(f);
    auto pb = point_bounds(ctx, f, x);
    return {item1_holds(pb.bounds), pb.bounds};
}

// Certifies that x and y converge to the same solution:
// 100*alpha(x) < 3 and 20*||x - y||*gamma(x) < 1, both squared.
inline bool same_root(const PolynomialSystem& f, const CVector& x, const CVector& y) {
    GammaContext ctx(f);
    auto pb = point_bounds(ctx, f, x);
    if (!(10000 * pb.bounds.alpha_sq_upper < 9))
        return false;
    return 400 * norm_sq(x - y) * pb.bounds.gamma_sq_upper < 1;
}

// Repeated exact Newton steps; with round_bits set, every step is rounded
// to denominators dividing 2^round_bits, which bounds bit growth. Each
// certificate consumer recomputes its bounds at the rounded point, so
// rounding cannot corrupt a certificate.
inline CVector refine(const PolynomialSystem& f, CVector x, std::size_t iters,
                      std::optional<unsigned> round_bits = std::nullopt) {
    for (std::size_t t = 0; t < iters; ++t) {
        x = newton_step(f, x);
        if (round_bits)
            for (auto& z : x)
                z = dyadic_round(z, *round_bits);
    }
    return x;
}

} // namespace alphacert
