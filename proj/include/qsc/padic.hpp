#pragma once

#include <string>
#include <vector>

#include "qsc/check_result.hpp"

namespace qsc {

/// A p-integral rational reduced modulo p^k.
struct PadicResidue {
    BigInt p;
    long precision = 1;
    BigInt residue;  // in [0, p^k)

    BigInt modulus() const { return pow_int(p, static_cast<unsigned long>(precision)); }
    /// Symmetric representative in (-p^k/2, p^k/2].
    BigInt symmetric() const;
};

/// Integer coefficient table a(1..M) of a q-expansion, keyed by index.
struct CoeffTable {
    std::string label;
    std::map<long, BigInt> entries;

    bool has(long n) const { return entries.count(n) != 0; }
    const BigInt& at(long n) const;
};

/// Plain-text "p,a_p" records, '#' comments, strictly increasing indices.
CoeffTable parse_coeff_file(const std::string& path);
CoeffTable parse_coeff_stream(std::istream& in, const std::string& label);

bool is_prime(long n);

/// Classical kth term (r1)_k (1-r1)_k (r2)_k (1-r2)_k / k!^4.
BigRational classical_term(const HypCase& c, long k);
/// H(N) = sum of the first N classical terms.
BigRational h_classical(const HypCase& c, long N);

/// Canonical residue of x mod p^k. Throws "not p-integral" when p | den(x).
PadicResidue padic_reduce(const BigRational& x, long p, long k);

/// Dwork quotient congruence H(p^{s+1})/H(p^s) == H(p^s)/H(p^{s-1}) mod p^3.
/// The achieved valuation is reported raw, so callers can also compare it
/// against 3s (an observation, never asserted here).
CheckResult dwork_check(const HypCase& c, long p, long s);

/// H(p^{s+1})/H(p^s) mod p^k, k <= 3.
PadicResidue unit_root_estimate(const HypCase& c, long p, long s, long k);

/// Coefficients a(1..M) of q * prod (1-q^{3m})^8 (the CM eta product).
CoeffTable eta_cm_coeffs(long M);

/// Morita p-adic gamma at a p-integral rational argument, mod p^k.
PadicResidue gamma_p(const BigRational& x, long p, long k);

/// H_{1/4,1/3}(p) == -Gamma_p(1/3)^9 mod p^4 for p == 1 (mod 3), with the
/// mod-p^3 part cross-checked against the eta coefficient a(p).
CheckResult cm_check(long p);

/// a(p) = 0 for p == 2 (mod 3) in the CM eta expansion.
bool cm_ap_vanishes(long p);

/// Rodriguez-Villegas comparison H(p) == a(p) mod p^3 against an ingested
/// coefficient table. Throws "a(p) unavailable" when the index is missing.
CheckResult rv_check(const HypCase& c, long p, const CoeffTable& table);

}  // namespace qsc
