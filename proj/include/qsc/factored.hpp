#pragma once

#include <map>

#include "qsc/poly.hpp"

namespace qsc {

/// Known factorization of a monic denominator: q^{q_pow} * prod Phi_e^{phi[e]}.
/// Carried alongside rational functions built from q-Pochhammer data so that
/// reduction and Phi-adic valuations never need a generic polynomial gcd.
struct DenFactors {
    long q_pow = 0;
    std::map<long, long> phi;  // e -> exponent > 0

    bool trivial() const { return q_pow == 0 && phi.empty(); }
    long phi_exponent(long n) const {
        auto it = phi.find(n);
        return it == phi.end() ? 0 : it->second;
    }
};

/// A rational function of the shape sign * q^t * prod (q^m - 1)^{e_m}.
/// Every term, term ratio and Pochhammer quotient in this project has this
/// shape, which makes products, quotients, integer powers and the substitution
/// q -> q^e exact bookkeeping on exponents.
class CycloProduct {
public:
    CycloProduct() = default;
    static CycloProduct zero_value();

    bool is_zero() const { return zero_; }
    int sign() const { return sign_; }
    long q_pow() const { return qpow_; }
    const std::map<long, long>& factors() const { return fac_; }

    /// Multiply by (1 - q^m)^count. m < 0 rewrites via
    /// (1 - q^m) = q^m (q^{|m|} - 1); m = 0 collapses the product to zero.
    void mul_one_minus(long m, long count = 1);
    void div_one_minus(long m, long count = 1);
    void mul_q_pow(long t) { qpow_ += t; }

    CycloProduct& operator*=(const CycloProduct& o);
    CycloProduct& operator/=(const CycloProduct& o);
    CycloProduct pow(long e) const;
    /// q -> q^e on the underlying expression (e >= 1).
    void scale_exponents(long e);

    /// Exponent of Phi_n in the full cyclotomic factorization
    /// (sum of e_m over m divisible by n).
    long phi_exponent(long n) const;

    struct Expanded {
        DensePoly num;  // includes sign and any positive q power
        DensePoly den;  // monic: q^{q_pow} * prod Phi_e^{b_e}
        DenFactors den_fact;
    };
    /// Expands into a coprime numerator/denominator pair. The cyclotomic
    /// exponent vector is re-assembled greedily into (q^m - 1) binomials so
    /// that most of the expansion happens by shift-subtract rather than dense
    /// multiplication.
    Expanded expand() const;

private:
    bool zero_ = false;
    int sign_ = 1;
    long qpow_ = 0;
    std::map<long, long> fac_;  // m -> exponent of (q^m - 1), nonzero
    void bump(long m, long count);
};

/// prod Phi_e^{exps[e]} for non-negative exponents (monic).
DensePoly expand_phi_powers(std::map<long, long> exps);

}  // namespace qsc
