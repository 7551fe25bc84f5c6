#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <alphacert/rational.hpp>

namespace alphacert {

using CVector = std::vector<GaussianRational>;

inline CVector conj(const CVector& v) {
    CVector out;
    out.reserve(v.size());
    for (const auto& z : v)
        out.push_back(conj(z));
    return out;
}

inline CVector operator-(const CVector& a, const CVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("vector sizes differ");
    CVector out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(a[i] - b[i]);
    return out;
}

// Sum of |v_i|^2, exact.
inline Rational norm_sq(const CVector& v) {
    Rational s;
    for (const auto& z : v)
        s += abs_sq(z);
    return s;
}

inline bool is_real(const CVector& v) {
    for (const auto& z : v)
        if (z.im != 0)
            return false;
    return true;
}

// Dense row-major matrix of Gaussian rationals; dimensions fixed at
// construction.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    CVector column(std::size_t j) const {
        CVector out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back((*this)(i, j));
        return out;
    }

    friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> a_;
};

inline CMatrix conj(const CMatrix& m) {
    CMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = conj(m(i, j));
    return out;
}

inline CVector mat_vec(const CMatrix& m, const CVector& x) {
    if (m.cols() != x.size())
        throw DimensionMismatch("matrix-vector dimensions differ");
    CVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        GaussianRational s;
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += m(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

namespace detail {

// Gaussian integer: complex with mpz parts. The elimination below works over
// these so Bareiss division stays exact.
struct ZGauss {
    Int re, im;

    bool is_zero() const { return re == 0 && im == 0; }
};

inline ZGauss zmul(const ZGauss& a, const ZGauss& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ZGauss zsub(const ZGauss& a, const ZGauss& b) { return {a.re - b.re, a.im - b.im}; }

inline void divexact(Int& q, const Int& n, const Int& d) {
    mpz_divexact(q.backend().data(), n.backend().data(), d.backend().data());
}

// Exact division in Z[i]; the quotient is known to be a Gaussian integer.
inline ZGauss zdivexact(const ZGauss& a, const ZGauss& b) {
    Int m = b.re * b.re + b.im * b.im;
    ZGauss num{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
    ZGauss q;
    divexact(q.re, num.re, m);
    divexact(q.im, num.im, m);
    return q;
}

inline std::size_t zbits(const ZGauss& z) {
    std::size_t br = mpz_sizeinbase(z.re.backend().data(), 2);
    std::size_t bi = mpz_sizeinbase(z.im.backend().data(), 2);
    return br > bi ? br : bi;
}

// Fraction-free (Bareiss) forward elimination on the augmented Gaussian
// integer matrix [A | B], followed by exact rational back-substitution.
// Pivots are chosen by exact nonzero test, smallest bit-size first to damp
// coefficient growth. Throws SingularMatrix if a pivot column is zero.
inline std::vector<CVector> solve_fraction_free(const CMatrix& A, const std::vector<CVector>& rhs) {
    const std::size_t n = A.rows();
    if (A.cols() != n)
        throw DimensionMismatch("matrix must be square");
    for (const auto& b : rhs)
        if (b.size() != n)
            throw DimensionMismatch("right-hand side size differs from matrix");
    const std::size_t m = n + rhs.size();

    // Clear denominators row by row: multiply each row of [A | B] by the lcm
    // of its entries' denominators (row scaling leaves solutions unchanged).
    std::vector<std::vector<ZGauss>> M(n, std::vector<ZGauss>(m));
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        auto fold = [&](const GaussianRational& z) {
            l = lcm(l, den(z.re));
            l = lcm(l, den(z.im));
        };
        for (std::size_t j = 0; j < n; ++j)
            fold(A(i, j));
        for (const auto& b : rhs)
            fold(b[i]);
        auto scaled = [&](const GaussianRational& z) -> ZGauss {
            Int s;
            ZGauss out;
            divexact(s, l, den(z.re));
            out.re = num(z.re) * s;
            divexact(s, l, den(z.im));
            out.im = num(z.im) * s;
            return out;
        };
        for (std::size_t j = 0; j < n; ++j)
            M[i][j] = scaled(A(i, j));
        for (std::size_t j = 0; j < rhs.size(); ++j)
            M[i][n + j] = scaled(rhs[j][i]);
    }

    ZGauss prev{1, 0};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = n;
        std::size_t best = 0;
        for (std::size_t i = k; i < n; ++i) {
            if (M[i][k].is_zero())
                continue;
            std::size_t b = zbits(M[i][k]);
            if (piv == n || b < best) {
                piv = i;
                best = b;
            }
        }
        if (piv == n)
            throw SingularMatrix();
        if (piv != k)
            std::swap(M[piv], M[k]);

        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m; ++j)
                M[i][j] = zdivexact(zsub(zmul(M[i][j], M[k][k]), zmul(M[i][k], M[k][j])), prev);
            M[i][k] = ZGauss{};
        }
        prev = M[k][k];
    }
    if (M[n - 1][n - 1].is_zero())
        throw SingularMatrix();

    // Back-substitution over Q(i).
    std::vector<CVector> out(rhs.size(), CVector(n));
    for (std::size_t r = 0; r < rhs.size(); ++r) {
        for (std::size_t ii = n; ii-- > 0;) {
            GaussianRational s{make_rational(M[ii][n + r].re, 1), make_rational(M[ii][n + r].im, 1)};
            for (std::size_t j = ii + 1; j < n; ++j) {
                GaussianRational mij{make_rational(M[ii][j].re, 1), make_rational(M[ii][j].im, 1)};
                s -= mij * out[r][j];
            }
            GaussianRational p{make_rational(M[ii][ii].re, 1), make_rational(M[ii][ii].im, 1)};
            out[r][ii] = s / p;
        }
    }
    return out;
}

} // namespace detail

// Exact solution of A x = b via fraction-free elimination.
inline CVector solve_linear(const CMatrix& A, const CVector& b) {
    return detail::solve_fraction_free(A, {b})[0];
}

// Multi right-hand-side variant: one elimination, many back-substitutions.
inline std::vector<CVector> solve_linear_multi(const CMatrix& A, const std::vector<CVector>& rhs) {
    return detail::solve_fraction_free(A, rhs);
}

} // namespace alphacert
