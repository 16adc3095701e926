#pragma once

#include <optional>

#include "qsc/factored.hpp"
#include "qsc/poly.hpp"

namespace qsc {

/// Fully reduced fraction of dense polynomials: gcd(num, den) = 1 and den
/// monic, so equal values have equal representations. When the denominator's
/// cyclotomic factorization is known it is carried along; arithmetic between
/// two carriers stays in that world and reduces by exact cyclotomic division
/// instead of a generic gcd.
class RationalFunction {
public:
    RationalFunction() : den_(BigRational(1)) {}
    explicit RationalFunction(DensePoly num) : num_(std::move(num)), den_(BigRational(1)) {
        fact_ = DenFactors{};
    }
    /// General constructor; reduces via gcd. Throws "zero divisor" on den = 0.
    RationalFunction(DensePoly num, DensePoly den);

    static RationalFunction constant(const BigRational& c) {
        return RationalFunction(DensePoly(c));
    }
    static RationalFunction from_factored(const CycloProduct& p);
    /// Trusted constructor: num/den already coprime, den monic and matching fact.
    static RationalFunction reduced(DensePoly num, DensePoly den, std::optional<DenFactors> fact);

    const DensePoly& num() const { return num_; }
    const DensePoly& den() const { return den_; }
    const std::optional<DenFactors>& den_factors() const { return fact_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string str() const;

private:
    DensePoly num_, den_;
    std::optional<DenFactors> fact_;
};

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_neg(const RationalFunction& a);
RationalFunction rf_pow(const RationalFunction& a, long e);  // e < 0 inverts
RationalFunction rf_scale(const RationalFunction& a, const BigRational& c);

inline RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return rf_add(a, b);
}
inline RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return rf_sub(a, b);
}
inline RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return rf_mul(a, b);
}
inline RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return rf_div(a, b);
}

/// f(1/q) as a rational function.
RationalFunction rf_subst_inverse(const RationalFunction& f);
/// Throws on evaluation at a pole.
BigRational rf_eval(const RationalFunction& f, const BigRational& x);

/// Phi_n-adic valuation on Q(q): v(num) - v(den); infinite for 0.
Valuation rf_phi_valuation(const RationalFunction& f, long n);

/// Congruence modulus Phi_n(q)^k.
struct Modulus {
    long n = 1;
    long k = 1;
    DensePoly phi_pow;
    static Modulus make(long n, long k);
};

/// Valuation test of a - b against the modulus, computed on the
/// cross-multiplied difference (no inversion, no reduction needed).
/// Returns (v >= k, v); (true, infinite) when a = b.
std::pair<bool, Valuation> congruent(const RationalFunction& a, const RationalFunction& b,
                                     const Modulus& m);

}  // namespace qsc
