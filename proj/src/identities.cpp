#include "qsc/identities.hpp"

#include <numeric>

namespace qsc {

namespace {

// Sum over k < n of prefix_k * suffix_k / common denominator, where the
// factors are supplied per term. `num_factors(k)` lists the zeta powers c with
// a numerator factor (1 - a c); `den_factors(k)` the same for the denominator;
// `term_scalar(k)` multiplies the whole kth term.
template <typename NumF, typename DenF, typename ScalF>
FieldRationalFunction balanced_sum(long n, NumF num_factors, DenF den_factors,
                                   ScalF term_scalar) {
    const auto one = CycloFieldElement::from_rational(n, BigRational(1));
    std::vector<FieldPoly> suffix(static_cast<size_t>(n), FieldPoly::constant(n, one));
    for (long k = n - 2; k >= 0; --k) {
        FieldPoly s = suffix[static_cast<size_t>(k + 1)];
        for (const auto& c : den_factors(k + 1)) s = s * FieldPoly::one_minus_linear(n, c);
        suffix[static_cast<size_t>(k)] = std::move(s);
    }
    FieldPoly num(n);
    FieldPoly prefix = FieldPoly::constant(n, one);
    for (long k = 0; k < n; ++k) {
        if (k > 0)
            for (const auto& c : num_factors(k)) prefix = prefix * FieldPoly::one_minus_linear(n, c);
        num = num + scale(prefix * suffix[static_cast<size_t>(k)], term_scalar(k));
    }
    return FieldRationalFunction(std::move(num), suffix[0]);
}

FieldPoly all_ones(long n, int alternating) {
    // 1 + a + ... + a^{n-1}, or the sign-alternating version
    std::vector<CycloFieldElement> cs;
    for (long i = 0; i < n; ++i)
        cs.push_back(CycloFieldElement::from_rational(
            n, BigRational(alternating && (i % 2) ? -1 : 1)));
    return FieldPoly(n, std::move(cs));
}

CheckResult identity_result(const std::string& id, std::optional<HypCase> kase,
                            std::map<std::string, long> params, long n, bool holds) {
    return make_result(id, std::move(kase), std::move(params), 'n', n, 0, Valuation::infinite(),
                       holds ? Valuation::infinite() : Valuation::finite(0));
}

}  // namespace

FieldRationalFunction f_of_a(const BigRational& r1, const BigRational& r2, long n) {
    const HypCase c = make_case(r1, r2);
    if (std::gcd(n, c.d) != 1) throw std::domain_error("n not coprime to d");
    const auto exps = case_exponents(c);
    return balanced_sum(
        n,
        [&](long k) {
            std::vector<CycloFieldElement> out;
            for (long a : exps) out.push_back(CycloFieldElement::zeta_pow(n, a + c.d * (k - 1)));
            return out;
        },
        [&](long k) {
            return std::vector<CycloFieldElement>(4, CycloFieldElement::zeta_pow(n, c.d * k));
        },
        [&](long k) { return CycloFieldElement::zeta_pow(n, c.d * k); });
}

FieldRationalFunction g_of_a(const BigRational& r, long n) {
    if (r <= 0 || r >= 1) throw std::invalid_argument("parameter must lie in (0,1)");
    const long d = r.get_den().get_si();
    if (std::gcd(n, 2 * d) != 1) throw std::domain_error("n not coprime to 2d");
    const BigRational rd = r * d;
    const long a1 = rd.get_num().get_si();
    const long a2 = d - a1;
    const auto one = CycloFieldElement::from_rational(n, BigRational(1));
    return balanced_sum(
        n,
        [&](long k) {
            return std::vector<CycloFieldElement>{CycloFieldElement::zeta_pow(n, a1 + d * (k - 1)),
                                                  CycloFieldElement::zeta_pow(n, a2 + d * (k - 1))};
        },
        [&](long k) {
            return std::vector<CycloFieldElement>(2, CycloFieldElement::zeta_pow(n, d * k));
        },
        [&](long k) {
            CycloFieldElement zk = CycloFieldElement::zeta_pow(n, d * k);
            return CycloFieldElement::from_rational(n, BigRational(2)) * zk / (one + zk);
        });
}

namespace {

// L(a) = F(a) F(1/a) / F(1)^2 for an already-built F.
FieldRationalFunction symmetrized(const FieldRationalFunction& F) {
    CycloFieldElement f1 = F.num().eval_one() / F.den().eval_one();
    if (f1.is_zero()) throw std::domain_error("degenerate normalization");
    FieldRationalFunction L = frf_mul(F, frf_subst_inverse(F));
    return frf_scale(L, (f1 * f1).inverse());
}

}  // namespace

CheckResult check_beau(const BigRational& r1, const BigRational& r2, long n) {
    FieldRationalFunction L = symmetrized(f_of_a(r1, r2, n));
    // (n a^{(n-1)/2} / (1+a+...+a^{n-1}))^4, the fourth power clearing the
    // half-integral exponent: numerator n^4 a^{2(n-1)}.
    FieldPoly num = mul_apow(
        FieldPoly::constant(n, CycloFieldElement::from_rational(n, pow_rational(BigRational(n), 4))),
        2 * (n - 1));
    FieldRationalFunction R(std::move(num), pow_fp(all_ones(n, 0), 4));
    return identity_result("beau", make_case(r1, r2), {{"n", n}}, n, L == R);
}

CheckResult check_beau2(const BigRational& r, long n) {
    FieldRationalFunction L = symmetrized(g_of_a(r, n));
    FieldPoly num = scale(pow_fp(all_ones(n, 1), 2),
                          CycloFieldElement::from_rational(n, BigRational(n * n)));
    FieldRationalFunction R(std::move(num), pow_fp(all_ones(n, 0), 2));
    return identity_result("beau2", make_case(r, r), {{"n", n}}, n, L == R);
}

std::vector<BigRational> ratio_taylor(long n, long order) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("requires odd n");
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    // substitute a = 1 - t: numerator n (1-t)^{(n-1)/2}, denominator
    // sum_{i<n} (1-t)^i; the series quotient gives the (1-a)-power coefficients
    const long half = (n - 1) / 2;
    const DensePoly one_minus_t = DensePoly::from_coeffs({BigRational(1), BigRational(-1)});
    DensePoly num = scale(pow_poly(one_minus_t, half), BigRational(n));
    DensePoly den, pw(BigRational(1));
    for (long i = 0; i < n; ++i) {
        den = add(den, pw);
        pw = mul(pw, one_minus_t);
    }
    std::vector<BigRational> out(static_cast<size_t>(order) + 1);
    const BigRational d0_inv = BigRational(1) / den.coeff(0);
    for (long i = 0; i <= order; ++i) {
        BigRational acc = num.coeff(i);
        for (long j = 1; j <= i; ++j) acc -= den.coeff(j) * out[static_cast<size_t>(i - j)];
        out[static_cast<size_t>(i)] = acc * d0_inv;
    }
    return out;
}

CycloFieldElement beau_quadratic_coeff(const BigRational& r1, const BigRational& r2, long n) {
    FieldRationalFunction L = symmetrized(f_of_a(r1, r2, n));
    return frf_taylor_at_one(L, 2)[2];
}

}  // namespace qsc
