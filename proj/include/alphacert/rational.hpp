#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include <alphacert/errors.hpp>

namespace alphacert {

// Exact scalars. Rational is GMP-backed and always canonical: lowest terms,
// positive denominator, zero stored as 0/1.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// The mpq constructor expects canonical input; this factory accepts anything.
inline Rational make_rational(Int num, Int den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Rational r(std::move(num), std::move(den));
    // mpq_canonicalize reduces to lowest terms in place.
    mpq_canonicalize(r.backend().data());
    return r;
}

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational out(1);
    Rational b = base;
    while (exp) {
        if (exp & 1u)
            out *= b;
        b *= b;
        exp >>= 1u;
    }
    return out;
}

// Exact value of a double (every finite double is a 53-bit dyadic).
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x))
        throw Error("cannot convert non-finite double to rational");
    Rational r;
    mpq_set_d(r.backend().data(), x);
    return r;
}

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational m = b.re * b.re + b.im * b.im;
        if (m == 0)
            throw Error("division by zero");
        return {(a.re * b.re + a.im * b.im) / m, (a.im * b.re - a.re * b.im) / m};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.re << (z.im < 0 ? "" : "+") << z.im << "i";
    }
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

// |z|^2, exact.
inline Rational abs_sq(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

} // namespace alphacert
