#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace curvasym {

// Exact rational scalar. Always canonical: lowest terms, positive denominator.
// mpq_class enforces this as long as construction goes through the helpers below.
using Rational = mpq_class;

using Complex = std::complex<double>;

// Builds num/den in canonical form. Throws on den == 0.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", or "p/q" into a canonical rational. Throws on malformed input.
inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational literal: " + text);
    }
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    q.canonicalize();
    return q;
}

// "p" when the denominator is one, else "p/q".
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

// Denominator as a machine integer; exponent lattices stay tiny in practice.
inline long denominator_long(const Rational& q) {
    const mpz_class& d = q.get_den();
    if (!d.fits_slong_p()) throw std::overflow_error("exponent denominator overflows long");
    return d.get_si();
}

inline long numerator_long(const Rational& q) {
    const mpz_class& n = q.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("exponent numerator overflows long");
    return n.get_si();
}

inline long lcm_long(long a, long b) {
    mpz_class r;
    mpz_lcm_ui(r.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(b));
    if (!r.fits_slong_p()) throw std::overflow_error("lcm overflows long");
    return r.get_si();
}

inline Rational binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

// z^k by repeated squaring; deterministic, exact for integer exponents.
inline Complex cpow_int(Complex z, long k) {
    if (k < 0) return 1.0 / cpow_int(z, -k);
    Complex acc(1.0, 0.0);
    while (k > 0) {
        if (k & 1) acc *= z;
        z *= z;
        k >>= 1;
    }
    return acc;
}

// Principal root z^(1/n): positive real magnitude root, argument arg(z)/n.
inline Complex principal_root(Complex z, long n) {
    if (n == 1) return z;
    double r = std::pow(std::abs(z), 1.0 / static_cast<double>(n));
    double th = std::arg(z) / static_cast<double>(n);
    return std::polar(r, th);
}

// exp(2*pi*i*k/n).
inline Complex root_of_unity(long k, long n) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    long m = ((k % n) + n) % n;
    if (m == 0) return Complex(1.0, 0.0);
    return std::polar(1.0, two_pi * static_cast<double>(m) / static_cast<double>(n));
}

// Principal z^e for rational e with small denominator; exact integer powers when possible.
inline Complex cpow_rational(Complex z, const Rational& e) {
    long num = numerator_long(e);
    long den = denominator_long(e);
    if (den == 1) return cpow_int(z, num);
    return cpow_int(principal_root(z, den), num);
}

}  // namespace curvasym
