#pragma once

#include "qsc/check_result.hpp"
#include "qsc/cyclo_field.hpp"

namespace qsc {

/// F_n(a; zeta_n) for parameters (r1, r2): the truncated balanced sum with the
/// auxiliary variable a, as an exact rational function in a over Q(zeta_n).
/// Requires gcd(n, d) = 1.
FieldRationalFunction f_of_a(const BigRational& r1, const BigRational& r2, long n);

/// G_n(a; zeta_n) for a single parameter r; requires gcd(n, 2d) = 1.
FieldRationalFunction g_of_a(const BigRational& r, long n);

/// F_n(a)F_n(1/a)/F_n(1)^2 == (n a^{(n-1)/2} / (1+a+...+a^{n-1}))^4 as an exact
/// identity in Q(zeta_n)(a). Throws "degenerate normalization" if F_n(1) = 0.
CheckResult check_beau(const BigRational& r1, const BigRational& r2, long n);

/// G_n(a)G_n(1/a)/G_n(1)^2 == (n (1-a+...+a^{n-1}) / (1+a+...+a^{n-1}))^2.
CheckResult check_beau2(const BigRational& r, long n);

/// Taylor coefficients of n a^{(n-1)/2} / (1+a+...+a^{n-1}) around a = 1 in
/// powers of (1-a), up to the given order; n odd. (Relative to (a-1)-powers
/// the odd-order signs flip.)
std::vector<BigRational> ratio_taylor(long n, long order);

/// Order-2 Taylor coefficient of F_n(a)F_n(1/a)/F_n(1)^2 at a = 1.
CycloFieldElement beau_quadratic_coeff(const BigRational& r1, const BigRational& r2, long n);

}  // namespace qsc
