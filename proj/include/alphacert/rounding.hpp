#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include <alphacert/rational.hpp>

namespace alphacert {

// Rational bracket [lo, hi] with lo^2 <= r <= hi^2 and
// hi - lo <= 2^-bits * max(1, hi). Perfect squares give lo == hi.
//
// Square roots are never needed exactly anywhere in the engine; brackets
// exist for comparisons that mix sums of roots and for report output.
inline std::pair<Rational, Rational> sqrt_bracket(const Rational& r, unsigned bits) {
    if (r < 0)
        throw NegativeInput("sqrt_bracket of negative value");
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits so the integer sqrt carries
    // `bits` fractional bits.
    Int nd = num(r) * den(r);
    nd <<= 2 * bits;
    Int rem;
    Int root = sqrt(nd, rem);
    Int scale = den(r) << bits;
    Rational lo = make_rational(root, scale);
    if (rem == 0)
        return {lo, lo};
    return {lo, make_rational(root + 1, scale)};
}

// Nearest rational with denominator dividing 2^bits, ties rounded up
// (toward +infinity). Error is at most 2^-(bits+1).
inline Rational dyadic_round(const Rational& x, unsigned bits) {
    // round(x*2^bits) = floor((2*n*2^bits + d) / (2*d))
    Int n = num(x);
    n <<= bits + 1;
    n += den(x);
    Int d = den(x) << 1;
    Int q;
    mpz_fdiv_q(q.backend().data(), n.backend().data(), d.backend().data());
    return make_rational(q, Int(1) << bits);
}

inline GaussianRational dyadic_round(const GaussianRational& z, unsigned bits) {
    return {dyadic_round(z.re, bits), dyadic_round(z.im, bits)};
}

enum class RoundDir { Down, Up };

// Decimal rendering with `digits` significant digits and directed rounding,
// scientific notation: [-]d.dddd...e[-]dd. Deterministic; used for the
// human-readable side of reports.
inline std::string decimal_string(const Rational& r, unsigned digits, RoundDir dir) {
    if (digits == 0)
        digits = 1;
    if (r == 0) {
        std::string s = "0.";
        s.append(digits - 1, '0');
        return s + "e+00";
    }
    bool neg = r < 0;
    Rational a = abs(r);
    // For a negative value, rounding the magnitude must go the other way.
    bool round_up = (dir == RoundDir::Up) != neg;

    // exponent e10 with 10^e10 <= a < 10^(e10+1)
    long e10 = 0;
    {
        // initial guess from bit lengths, then correct
        long nb = static_cast<long>(mpz_sizeinbase(num(a).backend().data(), 10));
        long db = static_cast<long>(mpz_sizeinbase(den(a).backend().data(), 10));
        e10 = nb - db;
        Int tens = pow(Int(10), static_cast<unsigned>(e10 >= 0 ? e10 : -e10));
        Rational p = e10 >= 0 ? Rational(tens) : make_rational(1, tens);
        while (a < p) {
            p /= 10;
            --e10;
        }
        while (a >= 10 * p) {
            p *= 10;
            ++e10;
        }
    }

    // mantissa = a * 10^(digits-1-e10), rounded in the requested direction
    long shift = static_cast<long>(digits) - 1 - e10;
    Int n = num(a), d = den(a);
    if (shift >= 0)
        n *= pow(Int(10), static_cast<unsigned>(shift));
    else
        d *= pow(Int(10), static_cast<unsigned>(-shift));
    Int mant, rem;
    divide_qr(n, d, mant, rem);
    if (round_up && rem != 0)
        ++mant;

    std::string ds = mant.str();
    if (ds.size() > digits) { // carry: 999..9 rounded up to 100..0
        ++e10;
        ds.pop_back();
    }
    std::string out = neg ? "-" : "";
    out += ds.substr(0, 1);
    out += '.';
    out += ds.substr(1);
    out += 'e';
    out += (e10 < 0) ? '-' : '+';
    long ae = e10 < 0 ? -e10 : e10;
    std::string es = std::to_string(ae);
    if (es.size() < 2)
        es.insert(0, "0");
    out += es;
    return out;
}

// Certified decimal bracket of sqrt(value): the true root lies between the
// two printed numbers.
inline std::pair<std::string, std::string>
sqrt_decimal_bracket(const Rational& value, unsigned digits = 20) {
    auto [lo, hi] = sqrt_bracket(value, 4 * digits);
    return {decimal_string(lo, digits, RoundDir::Down),
            decimal_string(hi, digits, RoundDir::Up)};
}

} // namespace alphacert
