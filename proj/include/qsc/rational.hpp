#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qsc {

using BigInt = mpz_class;

/// Arbitrary-precision rational, kept canonical (gcd(|num|,den)=1, den >= 1).
/// GMP's mpq_class maintains the canonical form through arithmetic; direct
/// construction from a num/den pair must go through make_rational.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

/// Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
inline BigRational parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rational(BigInt(s), 1);
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed fraction: " + s);
    }
}

inline std::string fraction_str(const BigRational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline BigRational pow_rational(const BigRational& x, long e) {
    if (e == 0) return BigRational(1);
    if (x == 0 && e < 0) throw std::domain_error("zero divisor");
    BigRational base = e > 0 ? x : BigRational(1) / x;
    unsigned long m = static_cast<unsigned long>(e > 0 ? e : -e);
    BigRational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), m);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), m);
    return out;
}

inline BigInt pow_int(const BigInt& b, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

inline long int_valuation(BigInt x, const BigInt& p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

/// p-adic valuation of a nonzero rational.
inline long rational_valuation(const BigRational& x, const BigInt& p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    if (mpz_divisible_p(x.get_num_mpz_t(), p.get_mpz_t())) v = int_valuation(x.get_num(), p);
    if (mpz_divisible_p(x.get_den_mpz_t(), p.get_mpz_t())) v -= int_valuation(x.get_den(), p);
    return v;
}

}  // namespace qsc
