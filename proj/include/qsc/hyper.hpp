#pragma once

#include <array>
#include <vector>

#include "qsc/rational_function.hpp"

namespace qsc {

/// Element of (1/2)Z, exact.
struct HalfInteger {
    long twice = 0;

    static HalfInteger of(long n) { return HalfInteger{2 * n}; }
    static HalfInteger halves(long t) { return HalfInteger{t}; }
    bool is_integer() const { return twice % 2 == 0; }
    long integer() const;
    BigRational value() const { return make_rational(twice, 2); }
    std::string str() const;
    bool operator==(const HalfInteger&) const = default;
};

HalfInteger parse_half_integer(const std::string& s);

/// One hypergeometric parameter pair (r1, r2) with its least common
/// denominator d and mu = r1(1-r1) + r2(1-r2). `member` marks the fourteen
/// pairs the congruences are stated for; arbitrary pairs are accepted so the
/// same machinery runs negative controls.
struct HypCase {
    BigRational r1, r2;
    long d = 1;
    BigRational mu;
    bool member = false;

    std::string str() const { return fraction_str(r1) + "," + fraction_str(r2); }
    bool operator==(const HypCase& o) const { return r1 == o.r1 && r2 == o.r2; }
};

HypCase make_case(const BigRational& r1, const BigRational& r2);
/// The fourteen admissible pairs, sorted by (r1, r2).
const std::vector<HypCase>& case_registry();
/// q-exponents {d r1, d(1-r1), d r2, d(1-r2)} of the four Pochhammer bases.
std::array<long, 4> case_exponents(const HypCase& c);

/// kth series term c(k; q^e) in factored form.
CycloProduct c_term_factored(const HypCase& c, long k, long e = 1);
/// c(k; q), reduced.
RationalFunction c_term(const HypCase& c, long k);

/// Truncated sum H(N; q^e) = sum_{k<N} c(k; q^e); exact, reduced, memoized.
RationalFunction h_sum(const HypCase& c, long N, long e);

/// c(l*n + k; q) / c(l*n; q) in Pochhammer-quotient form, defined for
/// half-integer l whenever all q-exponents d*l*n + ... are integers.
/// Throws "half-integer not admissible for this case/n" otherwise.
CycloProduct term_ratio_factored(const HypCase& c, HalfInteger l, long n, long k);
RationalFunction term_ratio(const HypCase& c, HalfInteger l, long n, long k);

/// Harmonic sums S1(k; q), S2(k; q) of the (1/2,1/2) analysis.
RationalFunction harmonic_s(long k, int which);

/// (Sigma1, Sigma2): weighted quotients over sum_{k<=m} c(k; q), m = (n-1)/2,
/// for the (1/2,1/2) case; n odd.
std::pair<RationalFunction, RationalFunction> sigma_sums(long n);

/// Q(l; q) = [sum_{k<=m} c(ln+k)/c(ln)] / [sum_{k<=m} c(k)], (1/2,1/2) case.
RationalFunction q_quotient(HalfInteger l, long n);

}  // namespace qsc
