#pragma once

#include <utility>
#include <vector>

#include "qsc/rational.hpp"
#include "qsc/valuation.hpp"

namespace qsc {

/// Dense univariate polynomial over the rationals. Coefficient i is the
/// coefficient of q^i; the empty list is the zero polynomial and the highest
/// stored coefficient is always nonzero.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(const BigRational& c0);
    explicit DensePoly(long c0) : DensePoly(BigRational(c0)) {}

    static DensePoly monomial(long e, const BigRational& c = BigRational(1));
    static DensePoly from_coeffs(std::vector<BigRational> cs);

    bool is_zero() const { return coeff_.empty(); }
    bool is_constant() const { return coeff_.size() <= 1; }
    bool is_one() const { return coeff_.size() == 1 && coeff_[0] == 1; }
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeff_; }
    const BigRational& leading() const;
    /// Coefficient of q^i (zero beyond the degree).
    BigRational coeff(long i) const;
    /// Number of trailing zero coefficients, i.e. the exact power of q dividing
    /// the polynomial (0 for the zero polynomial).
    long q_order() const;

    BigRational eval(const BigRational& x) const;

    bool operator==(const DensePoly& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const DensePoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<BigRational> coeff_;
    void trim();
    friend DensePoly add(const DensePoly&, const DensePoly&);
    friend DensePoly sub(const DensePoly&, const DensePoly&);
    friend DensePoly neg(const DensePoly&);
    friend DensePoly mul(const DensePoly&, const DensePoly&);
    friend DensePoly scale(const DensePoly&, const BigRational&);
    friend DensePoly shift_mul_qpow_minus_one(const DensePoly&, long);
    friend DensePoly shift_mul_one_minus_qpow(const DensePoly&, long);
    friend DensePoly mul_qpow(const DensePoly&, long);
    friend DensePoly compose_power(const DensePoly&, long);
    friend DensePoly reversed(const DensePoly&);
    friend std::pair<DensePoly, DensePoly> divrem(const DensePoly&, const DensePoly&);
};

DensePoly add(const DensePoly& a, const DensePoly& b);
DensePoly sub(const DensePoly& a, const DensePoly& b);
DensePoly neg(const DensePoly& a);
DensePoly mul(const DensePoly& a, const DensePoly& b);
DensePoly scale(const DensePoly& a, const BigRational& c);
/// a * (q^m - 1), m > 0 (shift-and-subtract; no full multiplication).
DensePoly shift_mul_qpow_minus_one(const DensePoly& a, long m);
/// a * (1 - q^m), m > 0.
DensePoly shift_mul_one_minus_qpow(const DensePoly& a, long m);
DensePoly mul_qpow(const DensePoly& a, long m);
DensePoly pow_poly(const DensePoly& a, long e);
/// a(q^e) for e >= 1.
DensePoly compose_power(const DensePoly& a, long e);
/// q^deg(a) * a(1/q).
DensePoly reversed(const DensePoly& a);
DensePoly monic(const DensePoly& a);

inline DensePoly operator+(const DensePoly& a, const DensePoly& b) { return add(a, b); }
inline DensePoly operator-(const DensePoly& a, const DensePoly& b) { return sub(a, b); }
inline DensePoly operator*(const DensePoly& a, const DensePoly& b) { return mul(a, b); }

/// Quotient and remainder with deg(rem) < deg(b). Throws on b = 0.
std::pair<DensePoly, DensePoly> divrem(const DensePoly& a, const DensePoly& b);
/// Exact division; returns false (leaving out untouched) when b does not divide a.
bool try_divexact(const DensePoly& a, const DensePoly& b, DensePoly& out);
DensePoly divexact(const DensePoly& a, const DensePoly& b);

/// Monic gcd over Q. Coprimality is certified from a single prime image;
/// nontrivial gcds are lifted by CRT and verified by exact trial division.
DensePoly gcd_poly(const DensePoly& a, const DensePoly& b);

/// nth cyclotomic polynomial (monic, integer coefficients, degree phi(n)).
/// Memoized; safe for concurrent use.
DensePoly cyclotomic(long n);
long euler_phi(long n);
std::vector<long> divisors(long n);

/// Largest k with Phi_n^k dividing p exactly; infinite for p = 0.
Valuation phi_valuation(const DensePoly& p, long n);
/// min(phi valuation, bound) for nonzero p; avoids dividing past the bound.
long phi_valuation_bounded(const DensePoly& p, long n, long bound);

/// Inverse of e modulo Phi_n^k, degree < k*phi(n).
/// Throws "non-invertible residue" when gcd(e, Phi_n) != 1.
DensePoly field_inverse(const DensePoly& e, long n, long k);

}  // namespace qsc
