#include "qsc/rational_function.hpp"

#include <stdexcept>

namespace qsc {

namespace {

// Cancels the known denominator factors out of num, dividing den to match.
// Postcondition: gcd(num, den) = 1 exactly, because den = q^s * prod Phi_e^b
// and every shared irreducible factor is one of the listed ones.
void cancel_factored(DensePoly& num, DensePoly& den, DenFactors& f) {
    if (num.is_zero()) {
        den = DensePoly(BigRational(1));
        f = DenFactors{};
        return;
    }
    for (auto it = f.phi.begin(); it != f.phi.end();) {
        long v = phi_valuation_bounded(num, it->first, it->second);
        if (v > 0) {
            const DensePoly phi_pow = pow_poly(cyclotomic(it->first), v);
            num = divexact(num, phi_pow);
            den = divexact(den, phi_pow);
            it->second -= v;
        }
        if (it->second == 0)
            it = f.phi.erase(it);
        else
            ++it;
    }
    if (f.q_pow > 0) {
        long t = std::min(f.q_pow, num.q_order());
        if (t > 0) {
            num = DensePoly::from_coeffs(
                {num.coeffs().begin() + t, num.coeffs().end()});
            den = DensePoly::from_coeffs(
                {den.coeffs().begin() + t, den.coeffs().end()});
            f.q_pow -= t;
        }
    }
}

DenFactors merge_factors(const DenFactors& a, const DenFactors& b) {
    DenFactors out = a;
    out.q_pow += b.q_pow;
    for (const auto& [e, c] : b.phi) out.phi[e] += c;
    return out;
}

DenFactors lcm_factors(const DenFactors& a, const DenFactors& b) {
    DenFactors out = a;
    out.q_pow = std::max(a.q_pow, b.q_pow);
    for (const auto& [e, c] : b.phi) {
        auto it = out.phi.find(e);
        if (it == out.phi.end())
            out.phi[e] = c;
        else
            it->second = std::max(it->second, c);
    }
    return out;
}

// Expands lcm/f as a polynomial (the cofactor each numerator is scaled by).
DensePoly cofactor_poly(const DenFactors& lcm, const DenFactors& f) {
    std::map<long, long> exps;
    for (const auto& [e, c] : lcm.phi) {
        long d = c - f.phi_exponent(e);
        if (d > 0) exps[e] = d;
    }
    DensePoly out = expand_phi_powers(std::move(exps));
    if (lcm.q_pow > f.q_pow) out = mul_qpow(out, lcm.q_pow - f.q_pow);
    return out;
}

}  // namespace

RationalFunction::RationalFunction(DensePoly num, DensePoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero divisor");
    if (num_.is_zero()) {
        den_ = DensePoly(BigRational(1));
        fact_ = DenFactors{};
        return;
    }
    DensePoly g = gcd_poly(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    if (den_.leading() != 1) {
        BigRational inv = BigRational(1) / den_.leading();
        den_ = scale(den_, inv);
        num_ = scale(num_, inv);
    }
    if (den_.is_one()) fact_ = DenFactors{};
}

RationalFunction RationalFunction::reduced(DensePoly num, DensePoly den,
                                           std::optional<DenFactors> fact) {
    RationalFunction f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    f.fact_ = std::move(fact);
    return f;
}

RationalFunction RationalFunction::from_factored(const CycloProduct& p) {
    if (p.is_zero()) return RationalFunction();
    auto ex = p.expand();
    return reduced(std::move(ex.num), std::move(ex.den), std::move(ex.den_fact));
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_factors() && b.den_factors()) {
        DenFactors l = lcm_factors(*a.den_factors(), *b.den_factors());
        DensePoly ca = cofactor_poly(l, *a.den_factors());
        DensePoly cb = cofactor_poly(l, *b.den_factors());
        DensePoly num = add(mul(a.num(), ca), mul(b.num(), cb));
        DensePoly den = mul(a.den(), ca);
        cancel_factored(num, den, l);
        return RationalFunction::reduced(std::move(num), std::move(den), std::move(l));
    }
    return RationalFunction(add(mul(a.num(), b.den()), mul(b.num(), a.den())),
                            mul(a.den(), b.den()));
}

RationalFunction rf_neg(const RationalFunction& a) {
    return RationalFunction::reduced(neg(a.num()), a.den(), a.den_factors());
}

RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b) {
    return rf_add(a, rf_neg(b));
}

RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    if (a.den_factors() && b.den_factors()) {
        DenFactors f = merge_factors(*a.den_factors(), *b.den_factors());
        DensePoly num = mul(a.num(), b.num());
        DensePoly den = mul(a.den(), b.den());
        cancel_factored(num, den, f);
        return RationalFunction::reduced(std::move(num), std::move(den), std::move(f));
    }
    return RationalFunction(mul(a.num(), b.num()), mul(a.den(), b.den()));
}

RationalFunction rf_scale(const RationalFunction& a, const BigRational& c) {
    if (c == 0) return RationalFunction();
    return RationalFunction::reduced(scale(a.num(), c), a.den(), a.den_factors());
}

RationalFunction rf_div(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    if (a.is_zero()) return a;
    if (b.num().is_constant())
        return rf_mul(rf_scale(a, BigRational(1) / b.num().leading()),
                      RationalFunction(b.den()));
    return RationalFunction(mul(a.num(), b.den()), mul(a.den(), b.num()));
}

RationalFunction rf_pow(const RationalFunction& a, long e) {
    if (e == 0) return RationalFunction(DensePoly(BigRational(1)));
    RationalFunction base = a;
    if (e < 0) {
        if (a.is_zero()) throw std::domain_error("zero divisor");
        base = RationalFunction(a.den(), a.num());
        e = -e;
    }
    RationalFunction acc(DensePoly(BigRational(1)));
    while (e > 0) {
        if (e & 1) acc = rf_mul(acc, base);
        e >>= 1;
        if (e) base = rf_mul(base, base);
    }
    return acc;
}

RationalFunction rf_subst_inverse(const RationalFunction& f) {
    if (f.is_zero()) return f;
    long dn = f.num().degree(), dd = f.den().degree();
    DensePoly num = reversed(f.num());
    DensePoly den = reversed(f.den());
    if (dd > dn)
        num = mul_qpow(num, dd - dn);
    else if (dn > dd)
        den = mul_qpow(den, dn - dd);
    return RationalFunction(std::move(num), std::move(den));
}

BigRational rf_eval(const RationalFunction& f, const BigRational& x) {
    BigRational d = f.den().eval(x);
    if (d == 0) throw std::domain_error("evaluation at pole");
    return f.num().eval(x) / d;
}

Valuation rf_phi_valuation(const RationalFunction& f, long n) {
    if (f.is_zero()) return Valuation::infinite();
    long den_v;
    if (f.den_factors())
        den_v = f.den_factors()->phi_exponent(n);
    else
        den_v = phi_valuation(f.den(), n).v;
    return phi_valuation(f.num(), n) - den_v;
}

Modulus Modulus::make(long n, long k) {
    if (n < 1 || k < 1) throw std::invalid_argument("modulus requires n >= 1, k >= 1");
    return Modulus{n, k, pow_poly(cyclotomic(n), k)};
}

std::pair<bool, Valuation> congruent(const RationalFunction& a, const RationalFunction& b,
                                     const Modulus& m) {
    DensePoly cross = sub(mul(a.num(), b.den()), mul(b.num(), a.den()));
    if (cross.is_zero()) return {true, Valuation::infinite()};
    long va = a.den_factors() ? a.den_factors()->phi_exponent(m.n)
                              : phi_valuation(a.den(), m.n).v;
    long vb = b.den_factors() ? b.den_factors()->phi_exponent(m.n)
                              : phi_valuation(b.den(), m.n).v;
    Valuation v = phi_valuation(cross, m.n) - (va + vb);
    return {v.at_least(m.k), v};
}

}  // namespace qsc
