#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <alphacert/alpha.hpp>
#include <alphacert/structure.hpp>

namespace alphacert {

// Newton-invariant target set: either all of R^n, or the conjugate-pair set
// of a block structure (shared and b-blocks real, each d-block the complex
// conjugate of the matching c-block).
class InvariantSet {
public:
    enum class Kind { FullReal, ConjPairs };

    static InvariantSet full_real(std::size_t n) {
        if (n == 0)
            throw DimensionMismatch("full-real set needs ambient dimension >= 1");
        InvariantSet v;
        v.kind_ = Kind::FullReal;
        v.n_ = n;
        return v;
    }

    static InvariantSet conj_pairs(const BlockStructure& bs) {
        if (!bs.counts_consistent())
            throw StructureArithmetic("conjugate-pair set needs consistent block counts");
        InvariantSet v;
        v.kind_ = Kind::ConjPairs;
        v.n_ = bs.ambient_dimension();
        v.bs_ = bs;
        return v;
    }

    Kind kind() const { return kind_; }
    std::size_t ambient_dimension() const { return n_; }
    const BlockStructure& blocks() const { return bs_; }

private:
    InvariantSet() = default;
    Kind kind_ = Kind::FullReal;
    std::size_t n_ = 0;
    BlockStructure bs_;
};

// Exact squared distance from x to V.
//
// For V = R^n this is ||Im x||^2. For conjugate pairs it is the squared
// half-norm of (a - conj a, b_i - conj b_i, c_j - conj d_j, d_j - conj c_j).
inline Rational delta_sq(const CVector& x, const InvariantSet& V) {
    if (x.size() != V.ambient_dimension())
        throw DimensionMismatch("point dimension differs from invariant set");
    if (V.kind() == InvariantSet::Kind::FullReal) {
        Rational s;
        for (const auto& z : x)
            s += z.im * z.im;
        return s;
    }
    const BlockStructure& bs = V.blocks();
    Rational acc;
    std::size_t real_coords = bs.m + bs.k * bs.q;
    for (std::size_t i = 0; i < real_coords; ++i)
        acc += abs_sq(x[i] - conj(x[i]));
    std::size_t c0 = bs.m + bs.k * bs.q;
    std::size_t d0 = c0 + bs.ell * bs.q;
    for (std::size_t t = 0; t < bs.ell * bs.q; ++t) {
        acc += abs_sq(x[c0 + t] - conj(x[d0 + t]));
        acc += abs_sq(x[d0 + t] - conj(x[c0 + t]));
    }
    return acc / 4;
}

// Closest point of V: real parts for the real coordinates, conjugate
// averages for the c/d pairs. ||x - result||^2 == delta_sq(x, V) exactly.
inline CVector project_onto_v(const CVector& x, const InvariantSet& V) {
    if (x.size() != V.ambient_dimension())
        throw DimensionMismatch("point dimension differs from invariant set");
    CVector out = x;
    if (V.kind() == InvariantSet::Kind::FullReal) {
        for (auto& z : out)
            z.im = 0;
        return out;
    }
    const BlockStructure& bs = V.blocks();
    std::size_t real_coords = bs.m + bs.k * bs.q;
    for (std::size_t i = 0; i < real_coords; ++i)
        out[i].im = 0;
    std::size_t c0 = real_coords;
    std::size_t d0 = c0 + bs.ell * bs.q;
    GaussianRational half(make_rational(1, 2));
    for (std::size_t t = 0; t < bs.ell * bs.q; ++t) {
        out[c0 + t] = (x[c0 + t] + conj(x[d0 + t])) * half;
        out[d0 + t] = conj(out[c0 + t]);
    }
    return out;
}

enum class CertOutcome {
    InV,
    NotInV,
    ApproxSolutionOnly,
    Unresolved,
    SingularJacobianHit,
};

inline const char* to_string(CertOutcome o) {
    switch (o) {
    case CertOutcome::InV: return "InV";
    case CertOutcome::NotInV: return "NotInV";
    case CertOutcome::ApproxSolutionOnly: return "ApproxSolutionOnly";
    case CertOutcome::Unresolved: return "Unresolved";
    case CertOutcome::SingularJacobianHit: return "SingularJacobian";
    }
    return "?";
}

struct CertReport {
    CertOutcome outcome = CertOutcome::Unresolved;
    std::vector<CertBounds> trace; // one entry per certify iteration
    std::size_t iterations = 0;
    CVector final_point;
    std::string note;
};

// Thrown when the input to the certify loop fails the approximate-solution
// gate; carries the bounds that failed.
class NotAnApproximateSolution : public Error {
public:
    explicit NotAnApproximateSolution(CertBounds bounds)
        : Error("input point is not certified an approximate solution"),
          bounds_(std::move(bounds)) {}
    const CertBounds& bounds() const { return bounds_; }

private:
    CertBounds bounds_;
};

struct CertifyOptions {
    std::size_t max_iters = 8;
    // When set, Newton iterates are dyadically rounded; the bit count
    // doubles every iteration so rounding error shrinks faster than the
    // quadratic convergence it rides along with.
    std::optional<unsigned> round_bits;
};

// The certify loop. Decides whether the associated solution of x lies in V:
//
//   1. compute beta^2, gamma^2 upper bound, alpha^2 upper bound, delta^2
//   2. if delta^2 > 4 beta^2            -> the solution is NOT in V
//   3. if 10^4 alpha^2 < 9 and 400 delta^2 gamma^2 < 1 -> the solution IS in V
//   4. x <- N_f(x) and repeat
//
// The input must pass the approximate-solution gate at iteration 0;
// otherwise neither conclusion would be about a well-defined associated
// solution. Requires real coefficients: both supported V are only
// Newton-invariant for real systems.
inline CertReport certify_in_v(const PolynomialSystem& f, CVector x, const InvariantSet& V,
                               const CertifyOptions& opts = {}) {
    detail::require_square(f);
    detail::require_point(f, x);
    if (V.ambient_dimension() != f.nvars())
        throw DimensionMismatch("invariant set dimension differs from system");
    if (!f.has_real_coefficients())
        throw Error("certification over an invariant set requires real coefficients");

    GammaContext ctx(f);
    CertReport rep;
    for (std::size_t t = 0; t < opts.max_iters; ++t) {
        PointBounds pb;
        try {
            pb = point_bounds(ctx, f, x);
        } catch (const SingularJacobian&) {
            rep.outcome = CertOutcome::SingularJacobianHit;
            rep.iterations = t;
            rep.final_point = std::move(x);
            rep.note = "singular Jacobian at iteration " + std::to_string(t);
            return rep;
        }
        pb.bounds.delta_sq = delta_sq(x, V);
        rep.trace.push_back(pb.bounds);

        if (t == 0 && !item1_holds(pb.bounds))
            throw NotAnApproximateSolution(pb.bounds);

        if (pb.bounds.delta_sq > 4 * pb.bounds.beta_sq) {
            rep.outcome = CertOutcome::NotInV;
            rep.iterations = t + 1;
            rep.final_point = std::move(x);
            return rep;
        }
        if (10000 * pb.bounds.alpha_sq_upper < 9 &&
            400 * pb.bounds.delta_sq * pb.bounds.gamma_sq_upper < 1) {
            rep.outcome = CertOutcome::InV;
            rep.iterations = t + 1;
            rep.final_point = std::move(x);
            return rep;
        }
        x = std::move(pb.newton_point);
        if (opts.round_bits) {
            unsigned shift = t < 16 ? static_cast<unsigned>(t) : 16u;
            unsigned bits = *opts.round_bits << shift;
            for (auto& z : x)
                z = dyadic_round(z, bits);
        }
    }
    rep.outcome = CertOutcome::Unresolved;
    rep.iterations = opts.max_iters;
    rep.final_point = std::move(x);
    rep.note = "undecided after " + std::to_string(opts.max_iters) + " iterations";
    return rep;
}

// Item-1 check packaged as a report, for callers that only want the gate.
inline CertReport check_approximate_solution(const PolynomialSystem& f, const CVector& x) {
    CertReport rep;
    rep.final_point = x;
    try {
        auto [ok, bounds] = is_approximate_solution(f, x);
        rep.trace.push_back(bounds);
        rep.iterations = 1;
        if (ok) {
            rep.outcome = CertOutcome::ApproxSolutionOnly;
        } else {
            rep.outcome = CertOutcome::Unresolved;
            rep.note = "approximate-solution test not satisfied";
        }
    } catch (const SingularJacobian&) {
        rep.outcome = CertOutcome::SingularJacobianHit;
        rep.note = "singular Jacobian at the input point";
    }
    return rep;
}

// Coordinate j of the associated solution is certifiably nonreal when the
// imaginary part of x_j clears the 2*beta error radius.
inline bool certify_coordinate_nonreal(const Rational& beta_sq_value, const CVector& x,
                                       std::size_t j) {
    if (j >= x.size())
        throw DimensionMismatch("coordinate index out of range");
    return x[j].im * x[j].im > 4 * beta_sq_value;
}

inline bool certify_coordinate_nonreal(const PolynomialSystem& f, const CVector& x,
                                       std::size_t j) {
    return certify_coordinate_nonreal(beta_sq(f, x), x, j);
}

// The associated solutions of x and y differ in the selected coordinates
// when the projected distance clears both 2*beta error radii:
// lo(||pi x - pi y||) > hi(2 beta_x) + hi(2 beta_y), via sqrt brackets.
inline bool certify_distinct(const Rational& beta_sq_x, const Rational& beta_sq_y,
                             const CVector& x, const CVector& y,
                             const std::vector<std::size_t>& coords, unsigned bits = 96) {
    if (x.size() != y.size())
        throw DimensionMismatch("point dimensions differ");
    Rational dist_sq;
    for (std::size_t c : coords) {
        if (c >= x.size())
            throw DimensionMismatch("coordinate index out of range");
        dist_sq += abs_sq(x[c] - y[c]);
    }
    Rational lo = sqrt_bracket(dist_sq, bits).first;
    Rational hix = sqrt_bracket(4 * beta_sq_x, bits).second;
    Rational hiy = sqrt_bracket(4 * beta_sq_y, bits).second;
    return lo > hix + hiy;
}

inline bool certify_distinct(const PolynomialSystem& f, const CVector& x, const CVector& y,
                             const std::vector<std::size_t>& coords) {
    return certify_distinct(beta_sq(f, x), beta_sq(f, y), x, y, coords);
}

} // namespace alphacert
