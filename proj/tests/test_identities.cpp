#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qsc/identities.hpp"

using namespace qsc;

namespace {
BigRational R(long a, long b) { return make_rational(a, b); }
}  // namespace

TEST_CASE("field elements") {
    CycloFieldElement z = CycloFieldElement::zeta_pow(3, 1);
    // 1 + z + z^2 = 0 in Q(zeta_3)
    CycloFieldElement one = CycloFieldElement::from_rational(3, 1);
    CHECK((one + z + z * z).is_zero());
    CHECK(pow_elem(z, 3) == one);
    CHECK(z * z.inverse() == one);
    CHECK(CycloFieldElement::zeta_pow(3, -1) == pow_elem(z, 2));

    // n=1 and n=2 collapse to the rationals
    CHECK(CycloFieldElement::zeta_pow(1, 5).is_one());
    CHECK(CycloFieldElement::zeta_pow(2, 1) == CycloFieldElement::from_rational(2, -1));
}

TEST_CASE("field polynomials") {
    const long n = 5;
    auto z = [&](long e) { return CycloFieldElement::zeta_pow(n, e); };
    FieldPoly p = FieldPoly::one_minus_linear(n, z(1)) * FieldPoly::one_minus_linear(n, z(2));
    CHECK(p.degree() == 2);
    CHECK(p.eval(z(-1)).is_zero());
    CHECK_FALSE(p.eval(z(0)).is_zero());

    FieldPoly g = gcd_field(p, FieldPoly::one_minus_linear(n, z(1)));
    CHECK(g.degree() == 1);

    auto [quo, rem] = divrem(p, g);
    CHECK(rem.is_zero());
    CHECK(quo.degree() == 1);
}

TEST_CASE("F_n(a) assembly") {
    // n = 1: the single k = 0 term
    FieldRationalFunction f1 = f_of_a(R(1, 2), R(1, 2), 1);
    CHECK(f1.num().degree() == 0);
    CHECK(f1.den().degree() == 0);
    CHECK(f1.num().eval_one().is_one());

    // denominator degree in a is bounded by 4(n-1)
    FieldRationalFunction f3 = f_of_a(R(1, 2), R(1, 2), 3);
    CHECK(f3.den().degree() <= 8);

    // evaluation at a = 1 reproduces sum_{k<n} c(k;q) mod Phi_n
    for (long n : {3L, 5L}) {
        FieldRationalFunction f = f_of_a(R(1, 2), R(1, 2), n);
        CycloFieldElement lhs = f.num().eval_one() / f.den().eval_one();
        HypCase half = make_case(R(1, 2), R(1, 2));
        RationalFunction h = h_sum(half, n, 1);
        CycloFieldElement rhs = CycloFieldElement(n, h.num()) / CycloFieldElement(n, h.den());
        CHECK(lhs == rhs);
    }

    CHECK_THROWS_WITH_AS(f_of_a(R(1, 2), R(1, 2), 4), "n not coprime to d", std::domain_error);
}

TEST_CASE("G_n(a) assembly") {
    FieldRationalFunction g1 = g_of_a(R(1, 2), 1);
    CHECK(g1.num().eval_one().is_one());
    CHECK(g1.den().degree() == 0);

    CHECK_NOTHROW(g_of_a(R(1, 3), 5));
    CHECK_THROWS_WITH_AS(g_of_a(R(1, 2), 4), "n not coprime to 2d", std::domain_error);
}

TEST_CASE("first homework identity") {
    CHECK(check_beau(R(1, 2), R(1, 2), 1).pass);
    for (long n : {3L, 5L}) {
        CheckResult r = check_beau(R(1, 2), R(1, 2), n);
        CHECK(r.pass);
        CHECK(r.achieved == Valuation::infinite());
    }
    CHECK(check_beau(R(1, 3), R(1, 3), 2).pass);
    CHECK(check_beau(R(1, 4), R(1, 3), 5).pass);
    // arbitrary rational parameters outside the fourteen
    CHECK(check_beau(R(1, 3), R(1, 5), 2).pass);

    // left side is invariant under a <-> 1/a
    for (long n : {3L, 5L}) {
        FieldRationalFunction F = f_of_a(R(1, 2), R(1, 2), n);
        CycloFieldElement f1 = F.num().eval_one() / F.den().eval_one();
        FieldRationalFunction L =
            frf_scale(frf_mul(F, frf_subst_inverse(F)), (f1 * f1).inverse());
        CHECK(frf_subst_inverse(L) == L);
    }
}

TEST_CASE("second homework identity") {
    CHECK(check_beau2(R(1, 2), 1).pass);
    CHECK(check_beau2(R(1, 2), 3).pass);
    CHECK(check_beau2(R(1, 3), 5).pass);
}

TEST_CASE("Taylor expansion of the cyclotomic ratio") {
    CHECK(ratio_taylor(1, 3) ==
          std::vector<BigRational>{R(1, 1), R(0, 1), R(0, 1), R(0, 1)});
    CHECK(ratio_taylor(3, 3) == std::vector<BigRational>{R(1, 1), R(0, 1), R(-1, 3), R(-1, 3)});
    CHECK(ratio_taylor(5, 2)[2] == R(-1, 1));

    for (long n = 1; n <= 11; n += 2) {
        auto t = ratio_taylor(n, 1);
        CHECK(t[0] == 1);
        CHECK(t[1] == 0);
    }
    for (long n = 3; n <= 11; n += 2) {
        auto t = ratio_taylor(n, 3);
        CHECK(t[2] == make_rational(-(n * n - 1), 24));
        CHECK(t[3] == make_rational(-(n * n - 1), 24));
    }
}

TEST_CASE("quadratic coefficient of the symmetrized sum") {
    for (long n : {3L, 5L}) {
        CycloFieldElement f = beau_quadratic_coeff(R(1, 2), R(1, 2), n);
        CHECK(f == CycloFieldElement::from_rational(n, make_rational(-(n * n - 1), 6)));
    }
}
