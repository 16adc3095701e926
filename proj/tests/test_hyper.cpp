#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <numeric>

#include "qsc/hyper.hpp"

using namespace qsc;

namespace {

DensePoly P(std::initializer_list<long> cs) {
    std::vector<BigRational> v;
    for (long c : cs) v.emplace_back(c);
    return DensePoly::from_coeffs(std::move(v));
}

const HypCase& half() {
    static HypCase c = make_case(make_rational(1, 2), make_rational(1, 2));
    return c;
}

}  // namespace

TEST_CASE("registry lists the fourteen pairs") {
    const auto& reg = case_registry();
    CHECK(reg.size() == 14);
    for (const auto& c : reg) {
        CHECK(c.member);
        CHECK(c.mu == c.r1 * (1 - c.r1) + c.r2 * (1 - c.r2));
    }

    HypCase hh = make_case(make_rational(1, 2), make_rational(1, 2));
    CHECK(hh.d == 2);
    CHECK(hh.mu == make_rational(1, 2));
    CHECK(hh.member);

    HypCase tw = make_case(make_rational(1, 12), make_rational(5, 12));
    CHECK(tw.d == 12);
    CHECK(tw.member);

    HypCase control = make_case(make_rational(1, 5), make_rational(1, 5));
    CHECK_FALSE(control.member);
    CHECK(control.d == 5);

    CHECK(case_exponents(half()) == std::array<long, 4>{1, 1, 1, 1});
    HypCase qt = make_case(make_rational(1, 4), make_rational(1, 3));
    CHECK(qt.d == 12);
    CHECK(case_exponents(qt) == std::array<long, 4>{3, 9, 4, 8});
}

TEST_CASE("series terms") {
    for (const auto& c : case_registry()) CHECK(c_term(c, 0) == RationalFunction(P({1})));

    RationalFunction c1 = c_term(half(), 1);
    CHECK(c1.num() == P({0, 0, 1}));
    CHECK(c1.den() == pow_poly(P({1, 1}), 4));

    // terms are symmetric under q -> 1/q, all cases
    for (const auto& c : case_registry())
        for (long k = 1; k <= 6; ++k) {
            RationalFunction t = c_term(c, k);
            CHECK(rf_subst_inverse(t) == t);
        }
}

TEST_CASE("half case terms vanish to order four past the midpoint") {
    for (long n = 3; n <= 9; n += 2)
        for (long k = 0; k < 3 * n; ++k) {
            if (k % n <= (n - 1) / 2) continue;
            CHECK(rf_phi_valuation(c_term(half(), k), n).at_least(4));
        }
}

TEST_CASE("truncated sums") {
    for (const auto& c : case_registry()) {
        CHECK(h_sum(c, 1, 1) == RationalFunction(P({1})));
        CHECK(h_sum(c, 1, 3) == RationalFunction(P({1})));
    }

    RationalFunction expect2 =
        RationalFunction(P({1})) + RationalFunction(P({0, 0, 1}), pow_poly(P({1, 1}), 4));
    CHECK(h_sum(half(), 2, 1) == expect2);

    RationalFunction expect2e2 = RationalFunction(P({1})) +
                                 RationalFunction(P({0, 0, 0, 0, 1}), pow_poly(P({1, 0, 1}), 4));
    CHECK(h_sum(half(), 2, 2) == expect2e2);

    // the batched evaluation agrees with naive term-by-term summation
    for (const auto& c : {half(), make_case(make_rational(1, 4), make_rational(1, 3))}) {
        for (long e : {1L, 4L}) {
            RationalFunction naive;
            for (long k = 0; k < 5; ++k)
                naive = naive + RationalFunction::from_factored(c_term_factored(c, k, e));
            CHECK(h_sum(c, 5, e) == naive);
        }
    }
}

TEST_CASE("sums in q^e equal substituted sums in q") {
    for (const auto& c : {make_case(make_rational(1, 2), make_rational(1, 2)),
                          make_case(make_rational(1, 6), make_rational(1, 4))}) {
        for (long N : {2L, 4L})
            for (long e : {2L, 9L}) {
                RationalFunction he = h_sum(c, N, e);
                RationalFunction h1 = h_sum(c, N, 1);
                // equality as rational functions, via cross-multiplication
                CHECK(mul(he.num(), compose_power(h1.den(), e)) ==
                      mul(compose_power(h1.num(), e), he.den()));
            }
    }
}

TEST_CASE("sums are phi-units at the roots of unity in play") {
    for (const auto& c : case_registry())
        for (long n = 2; n <= 5; ++n) {
            if (std::gcd(n, c.d) != 1) continue;
            for (long A = 1; A <= 2; ++A)
                CHECK(rf_phi_valuation(h_sum(c, A * n, 1), n) == Valuation::finite(0));
        }
}

TEST_CASE("term ratios") {
    // l = 0 reduces to the plain term
    for (long k = 0; k <= 4; ++k)
        CHECK(term_ratio(half(), HalfInteger::of(0), 5, k) == c_term(half(), k));

    CHECK(term_ratio(half(), HalfInteger::of(1), 5, 0) == RationalFunction(P({1})));

    // l = -1/2, n = 3, k = 1: ((1-q^-2)/(1-q^-1))^4 q^2 = (q+1)^4 / q^2
    RationalFunction r = term_ratio(half(), HalfInteger::halves(-1), 3, 1);
    CHECK(r.num() == pow_poly(P({1, 1}), 4));
    CHECK(r.den() == P({0, 0, 1}));

    // ratio times base term reproduces the shifted term
    for (const auto& c : {half(), make_case(make_rational(1, 3), make_rational(1, 3)),
                          make_case(make_rational(1, 5), make_rational(2, 5))}) {
        for (long l = 1; l <= 2; ++l)
            for (long n = 2; n <= 7; ++n) {
                if (std::gcd(n, c.d) != 1) continue;
                for (long k = 0; k <= std::min<long>(n, 3); ++k) {
                    RationalFunction lhs =
                        term_ratio(c, HalfInteger::of(l), n, k) * c_term(c, l * n);
                    CHECK(lhs == c_term(c, l * n + k));
                }
            }
    }

    // non-integral exponents are rejected
    HypCase third = make_case(make_rational(1, 3), make_rational(1, 3));
    CHECK_THROWS_WITH_AS(term_ratio(third, HalfInteger::halves(1), 5, 1),
                         "half-integer not admissible for this case/n", std::domain_error);
}

TEST_CASE("harmonic sums") {
    CHECK(harmonic_s(0, 1).is_zero());
    CHECK(harmonic_s(0, 2).is_zero());

    // S1(1) = q/(1+q) + q^2/(1-q^2)
    RationalFunction expect = RationalFunction(P({0, 1}), P({1, 1})) +
                              RationalFunction(P({0, 0, -1}), P({-1, 0, 1}));
    CHECK(harmonic_s(1, 1) == expect);

    // S2(1) = q^2/(1-q)^2 + q^4/(1-q^2)^2 - 2 q^4/(1-q^2)^2
    RationalFunction s2 = RationalFunction(P({0, 0, 1}), pow_poly(P({-1, 1}), 2)) -
                          RationalFunction(P({0, 0, 0, 0, 1}), pow_poly(P({-1, 0, 1}), 2));
    CHECK(harmonic_s(1, 2) == s2);
}

TEST_CASE("sigma quotients") {
    auto [s1, s2] = sigma_sums(1);
    CHECK(s1.is_zero());
    CHECK(s2.is_zero());

    auto [t1, t2] = sigma_sums(3);
    RationalFunction c1 = c_term(half(), 1);
    RationalFunction expect = c1 * harmonic_s(1, 1) / (RationalFunction(P({1})) + c1);
    CHECK(t1 == expect);
    RationalFunction expect2 =
        c1 * (rf_scale(harmonic_s(1, 1) * harmonic_s(1, 1), 4) - harmonic_s(1, 2)) /
        (RationalFunction(P({1})) + c1);
    CHECK(t2 == expect2);

    RationalFunction den5;
    for (long k = 0; k <= 2; ++k) den5 = den5 + c_term(half(), k);
    CHECK(rf_phi_valuation(den5, 5) == Valuation::finite(0));
}

TEST_CASE("Q quotients") {
    for (long n : {3L, 5L, 7L})
        CHECK(q_quotient(HalfInteger::of(0), n) == RationalFunction(P({1})));

    // Q(-1/2; q) = c((n-1)/2; q)^{-1} exactly
    for (long n : {3L, 5L, 7L}) {
        RationalFunction lhs = q_quotient(HalfInteger::halves(-1), n);
        CHECK(lhs == rf_pow(c_term(half(), (n - 1) / 2), -1));
    }

    // q = 1 limit against classical shifted-factorial arithmetic:
    // c(k;1) = ((1/2)_k / k!)^4, so c(4)/c(3) = (7/2)^4/4^4 and
    // Q(1;1) = (1 + 2401/4096) / (1 + 1/16).
    auto classical = [](long k) {
        BigRational poch(1), fact(1);
        for (long j = 0; j < k; ++j) {
            poch *= make_rational(2 * j + 1, 2);
            fact *= j + 1;
        }
        return pow_rational(poch / fact, 4);
    };
    BigRational expect_q1 =
        (classical(3) + classical(4)) / classical(3) / (classical(0) + classical(1));
    CHECK(expect_q1 == make_rational(6497, 4352));
    CHECK(rf_eval(q_quotient(HalfInteger::of(1), 3), BigRational(1)) == expect_q1);
}

TEST_CASE("half integer parsing") {
    CHECK(parse_half_integer("-1/2") == HalfInteger::halves(-1));
    CHECK(parse_half_integer("2") == HalfInteger::of(2));
    CHECK(parse_half_integer("3/2").twice == 3);
    CHECK_THROWS_AS(parse_half_integer("1/3"), std::invalid_argument);
    CHECK(HalfInteger::halves(-1).value() == make_rational(-1, 2));
}
