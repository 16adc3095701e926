#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsc/poly.hpp"

using namespace qsc;

namespace {

DensePoly P(std::initializer_list<long> cs) {
    std::vector<BigRational> v;
    for (long c : cs) v.emplace_back(c);
    return DensePoly::from_coeffs(std::move(v));
}

DensePoly random_poly(std::mt19937& rng, int max_deg, int coeff_range) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-coeff_range, coeff_range);
    std::vector<BigRational> v(deg(rng) + 1);
    for (auto& c : v) c = BigRational(coef(rng));
    return DensePoly::from_coeffs(std::move(v));
}

}  // namespace

TEST_CASE("polynomial ring basics") {
    DensePoly qp1 = P({1, 1});   // q + 1
    DensePoly qm1 = P({-1, 1});  // q - 1
    CHECK(mul(qp1, qm1) == P({-1, 0, 1}));
    CHECK(add(qp1, qm1) == P({0, 2}));
    CHECK(sub(qp1, qp1).is_zero());

    auto [quo, rem] = divrem(P({0, 0, 0, 1}), qm1);  // q^3 / (q-1)
    CHECK(quo == P({1, 1, 1}));
    CHECK(rem == P({1}));

    CHECK_THROWS_WITH_AS(divrem(qp1, DensePoly()), "zero divisor", std::domain_error);

    CHECK(pow_poly(qp1, 2) == P({1, 2, 1}));
    CHECK(compose_power(P({1, 2, 3}), 2) == P({1, 0, 2, 0, 3}));
    CHECK(reversed(P({1, 2, 3})) == P({3, 2, 1}));
    CHECK(P({1, 2, 3}).eval(BigRational(2)) == 17);
}

TEST_CASE("gcd of shared-root quadratics") {
    // gcd(q^2 - 1, q^2 - 2q + 1) = q - 1
    CHECK(gcd_poly(P({-1, 0, 1}), P({1, -2, 1})) == P({-1, 1}));
    CHECK(gcd_poly(P({1, 1}), DensePoly()) == P({1, 1}));
    CHECK(gcd_poly(P({2, 2}), P({3})) == P({1}));
}

TEST_CASE("gcd recovers planted common factors") {
    std::mt19937 rng(20260809);
    for (int iter = 0; iter < 40; ++iter) {
        DensePoly g = random_poly(rng, 10, 8);
        DensePoly r1 = random_poly(rng, 14, 8);
        DensePoly r2 = random_poly(rng, 14, 8);
        if (g.is_zero() || r1.is_zero() || r2.is_zero()) continue;
        DensePoly a = mul(g, r1), b = mul(g, r2);
        DensePoly h = gcd_poly(a, b);
        DensePoly tmp;
        CHECK((try_divexact(h, monic(g), tmp) || h.degree() >= g.degree()));
        CHECK(try_divexact(a, h, tmp));
        CHECK(try_divexact(b, h, tmp));
    }
}

TEST_CASE("gcd under adversarial coefficient growth") {
    std::mt19937 rng(314159);
    std::uniform_int_distribution<long> big(-1000000, 1000000);
    for (int iter = 0; iter < 8; ++iter) {
        std::vector<BigRational> gc(25), r1c(30), r2c(30);
        for (auto& c : gc) c = make_rational(big(rng), 1 + (rng() % 97));
        for (auto& c : r1c) c = BigRational(big(rng));
        for (auto& c : r2c) c = BigRational(big(rng));
        DensePoly g = DensePoly::from_coeffs(std::move(gc));
        DensePoly r1 = DensePoly::from_coeffs(std::move(r1c));
        DensePoly r2 = DensePoly::from_coeffs(std::move(r2c));
        if (g.is_zero() || r1.is_zero() || r2.is_zero()) continue;
        DensePoly h = gcd_poly(mul(g, r1), mul(g, r2));
        DensePoly tmp;
        CHECK(try_divexact(h, monic(g), tmp));
        CHECK(try_divexact(mul(g, r1), h, tmp));
        CHECK(try_divexact(mul(g, r2), h, tmp));
    }
    // coprime certificate path: random dense pairs are almost surely coprime
    for (int iter = 0; iter < 8; ++iter) {
        std::vector<BigRational> ac(40), bc(40);
        for (auto& c : ac) c = BigRational(big(rng));
        for (auto& c : bc) c = BigRational(big(rng));
        DensePoly a = DensePoly::from_coeffs(std::move(ac));
        DensePoly b = DensePoly::from_coeffs(std::move(bc));
        if (a.is_zero() || b.is_zero()) continue;
        DensePoly h = gcd_poly(a, b);
        DensePoly tmp;
        CHECK(try_divexact(a, h, tmp));
        CHECK(try_divexact(b, h, tmp));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == P({-1, 1}));
    CHECK(cyclotomic(2) == P({1, 1}));
    CHECK(cyclotomic(4) == P({1, 0, 1}));
    CHECK(cyclotomic(6) == P({1, -1, 1}));
    CHECK(cyclotomic(12) == P({1, 0, -1, 0, 1}));

    for (long n = 1; n <= 30; ++n) {
        CHECK(cyclotomic(n).degree() == euler_phi(n));
        DensePoly prod(BigRational(1));
        for (long d : divisors(n)) prod = mul(prod, cyclotomic(d));
        CHECK(prod == shift_mul_qpow_minus_one(DensePoly(BigRational(1)), n));
    }
}

TEST_CASE("phi-adic valuation of polynomials") {
    DensePoly q5m1 = shift_mul_qpow_minus_one(DensePoly(BigRational(1)), 5);
    CHECK(phi_valuation(q5m1, 5) == Valuation::finite(1));
    CHECK(phi_valuation(pow_poly(q5m1, 3), 5) == Valuation::finite(3));
    CHECK(phi_valuation(P({1, 1}), 3) == Valuation::finite(0));
    CHECK(phi_valuation(DensePoly(), 7) == Valuation::infinite());
    CHECK(phi_valuation_bounded(pow_poly(q5m1, 3), 5, 2) == 2);
}

TEST_CASE("phi valuation is additive") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        long n = 2 + static_cast<long>(rng() % 6);
        DensePoly a = random_poly(rng, 8, 5), b = random_poly(rng, 8, 5);
        if (a.is_zero() || b.is_zero()) continue;
        if (rng() % 2) a = mul(a, cyclotomic(n));
        if (rng() % 2) b = mul(b, pow_poly(cyclotomic(n), 2));
        Valuation va = phi_valuation(a, n), vb = phi_valuation(b, n);
        CHECK(phi_valuation(mul(a, b), n) == Valuation::finite(va.v + vb.v));
    }
}

TEST_CASE("inverse modulo cyclotomic powers") {
    CHECK(field_inverse(DensePoly(BigRational(1)), 3, 2) == DensePoly(BigRational(1)));
    // q == -1 (mod q+1), so its inverse is -1
    CHECK(field_inverse(P({0, 1}), 2, 1) == P({-1}));
    // q-1 == -2 at q=-1
    CHECK(field_inverse(P({-1, 1}), 2, 1) == DensePoly(make_rational(-1, 2)));
    CHECK_THROWS_WITH_AS(field_inverse(P({-1, 1}), 1, 1), "non-invertible residue",
                         std::domain_error);
}

TEST_CASE("inverse property on random residues") {
    std::mt19937 rng(99);
    int done = 0;
    while (done < 25) {
        long n = 2 + static_cast<long>(rng() % 11);  // 2..12
        long k = 1 + static_cast<long>(rng() % 4);   // 1..4
        DensePoly e = random_poly(rng, 6, 5);
        if (e.is_zero() || gcd_poly(e, cyclotomic(n)).degree() > 0) continue;
        DensePoly f = field_inverse(e, n, k);
        DensePoly modulus = pow_poly(cyclotomic(n), k);
        CHECK(f.degree() < k * euler_phi(n));
        CHECK(divrem(sub(mul(e, f), DensePoly(BigRational(1))), modulus).second.is_zero());
        ++done;
    }
}
