#include "qsc/cyclo_field.hpp"

#include <stdexcept>

namespace qsc {

CycloFieldElement::CycloFieldElement(long n, DensePoly rep) : n_(n) {
    if (n < 1) throw std::invalid_argument("field index must be >= 1");
    rep_ = rep.degree() < euler_phi(n) ? std::move(rep) : divrem(rep, cyclotomic(n)).second;
}

CycloFieldElement CycloFieldElement::from_rational(long n, const BigRational& c) {
    return CycloFieldElement(n, DensePoly(c));
}

CycloFieldElement CycloFieldElement::zeta_pow(long n, long e) {
    long r = e % n;
    if (r < 0) r += n;
    return CycloFieldElement(n, DensePoly::monomial(r));
}

CycloFieldElement CycloFieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("zero divisor");
    return CycloFieldElement(n_, field_inverse(rep_, n_, 1));
}

CycloFieldElement operator+(const CycloFieldElement& a, const CycloFieldElement& b) {
    return CycloFieldElement(a.n_, add(a.rep_, b.rep_));
}
CycloFieldElement operator-(const CycloFieldElement& a, const CycloFieldElement& b) {
    return CycloFieldElement(a.n_, sub(a.rep_, b.rep_));
}
CycloFieldElement operator-(const CycloFieldElement& a) {
    return CycloFieldElement(a.n_, neg(a.rep_));
}
CycloFieldElement operator*(const CycloFieldElement& a, const CycloFieldElement& b) {
    return CycloFieldElement(a.n_, mul(a.rep_, b.rep_));
}
CycloFieldElement operator/(const CycloFieldElement& a, const CycloFieldElement& b) {
    return a * b.inverse();
}

CycloFieldElement pow_elem(const CycloFieldElement& b, long e) {
    CycloFieldElement acc = CycloFieldElement::from_rational(b.n(), BigRational(1));
    CycloFieldElement base = e < 0 ? b.inverse() : b;
    unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
    while (m) {
        if (m & 1) acc = acc * base;
        base = base * base;
        m >>= 1;
    }
    return acc;
}

FieldPoly::FieldPoly(long n, std::vector<CycloFieldElement> cs) : n_(n), coeff_(std::move(cs)) {
    trim();
}

void FieldPoly::trim() {
    while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
}

FieldPoly FieldPoly::constant(long n, const CycloFieldElement& c) {
    return FieldPoly(n, std::vector<CycloFieldElement>{c});
}

FieldPoly FieldPoly::one_minus_linear(long n, const CycloFieldElement& c) {
    return FieldPoly(n, {CycloFieldElement::from_rational(n, BigRational(1)), -c});
}

const CycloFieldElement& FieldPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero");
    return coeff_.back();
}

CycloFieldElement FieldPoly::eval(const CycloFieldElement& x) const {
    CycloFieldElement acc = CycloFieldElement::from_rational(n_, BigRational(0));
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

CycloFieldElement FieldPoly::eval_one() const {
    return eval(CycloFieldElement::from_rational(n_, BigRational(1)));
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
    FieldPoly r(a.n_);
    const auto zero = CycloFieldElement::from_rational(a.n_, BigRational(0));
    r.coeff_.assign(std::max(a.coeff_.size(), b.coeff_.size()), zero);
    for (size_t i = 0; i < a.coeff_.size(); ++i) r.coeff_[i] = a.coeff_[i];
    for (size_t i = 0; i < b.coeff_.size(); ++i) r.coeff_[i] = r.coeff_[i] + b.coeff_[i];
    r.trim();
    return r;
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
    FieldPoly r(a.n_);
    const auto zero = CycloFieldElement::from_rational(a.n_, BigRational(0));
    r.coeff_.assign(std::max(a.coeff_.size(), b.coeff_.size()), zero);
    for (size_t i = 0; i < a.coeff_.size(); ++i) r.coeff_[i] = a.coeff_[i];
    for (size_t i = 0; i < b.coeff_.size(); ++i) r.coeff_[i] = r.coeff_[i] - b.coeff_[i];
    r.trim();
    return r;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    FieldPoly r(a.n_);
    if (a.is_zero() || b.is_zero()) return r;
    const auto zero = CycloFieldElement::from_rational(a.n_, BigRational(0));
    r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, zero);
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeff_.size(); ++j)
            r.coeff_[i + j] = r.coeff_[i + j] + a.coeff_[i] * b.coeff_[j];
    }
    r.trim();
    return r;
}

FieldPoly scale(const FieldPoly& a, const CycloFieldElement& c) {
    FieldPoly r = a;
    for (auto& x : r.coeff_) x = x * c;
    r.trim();
    return r;
}

FieldPoly reversed(const FieldPoly& a) {
    FieldPoly r = a;
    std::reverse(r.coeff_.begin(), r.coeff_.end());
    r.trim();
    return r;
}

FieldPoly mul_apow(const FieldPoly& a, long m) {
    if (a.is_zero() || m == 0) return a;
    if (m < 0) throw std::invalid_argument("negative power of a");
    FieldPoly r(a.n_);
    const auto zero = CycloFieldElement::from_rational(a.n_, BigRational(0));
    r.coeff_.assign(static_cast<size_t>(m), zero);
    r.coeff_.insert(r.coeff_.end(), a.coeff_.begin(), a.coeff_.end());
    return r;
}

std::pair<FieldPoly, FieldPoly> divrem(const FieldPoly& a, const FieldPoly& b) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    if (a.degree() < b.degree()) return {FieldPoly(a.n()), a};
    const CycloFieldElement inv = b.leading().inverse();
    std::vector<CycloFieldElement> rem = a.coeffs();
    const long db = b.degree();
    const auto zero = CycloFieldElement::from_rational(a.n(), BigRational(0));
    std::vector<CycloFieldElement> quo(rem.size() - db, zero);
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        if (rem[i].is_zero()) continue;
        CycloFieldElement f = rem[i] * inv;
        quo[i - db] = f;
        for (long j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - f * b.coeffs()[j];
    }
    return {FieldPoly(a.n(), std::move(quo)), FieldPoly(a.n(), std::move(rem))};
}

FieldPoly monic(const FieldPoly& p) {
    if (p.is_zero()) return p;
    return scale(p, p.leading().inverse());
}

FieldPoly gcd_field(FieldPoly a, FieldPoly b) {
    while (!b.is_zero()) {
        FieldPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

FieldPoly pow_fp(const FieldPoly& p, long e) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    FieldPoly acc = FieldPoly::constant(p.n(), CycloFieldElement::from_rational(p.n(), 1));
    FieldPoly base = p;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

FieldPoly shift_by_one(const FieldPoly& p) {
    // Horner: p(1+t) accumulated from the leading coefficient
    FieldPoly acc(p.n());
    const FieldPoly one_plus_t(p.n(), {CycloFieldElement::from_rational(p.n(), 1),
                                       CycloFieldElement::from_rational(p.n(), 1)});
    for (long i = p.degree(); i >= 0; --i)
        acc = acc * one_plus_t +
              FieldPoly::constant(p.n(), p.coeffs()[static_cast<size_t>(i)]);
    return acc;
}

FieldRationalFunction::FieldRationalFunction(long n)
    : num_(n), den_(FieldPoly::constant(n, CycloFieldElement::from_rational(n, 1))) {}

FieldRationalFunction::FieldRationalFunction(FieldPoly num, FieldPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero divisor");
    if (num_.is_zero()) {
        den_ = FieldPoly::constant(num_.n(), CycloFieldElement::from_rational(num_.n(), 1));
        return;
    }
    FieldPoly g = gcd_field(num_, den_);
    if (g.degree() > 0) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
    }
    const CycloFieldElement inv = den_.leading().inverse();
    num_ = scale(num_, inv);
    den_ = scale(den_, inv);
}

FieldRationalFunction frf_mul(const FieldRationalFunction& a, const FieldRationalFunction& b) {
    return FieldRationalFunction(a.num() * b.num(), a.den() * b.den());
}

FieldRationalFunction frf_div(const FieldRationalFunction& a, const FieldRationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    return FieldRationalFunction(a.num() * b.den(), a.den() * b.num());
}

FieldRationalFunction frf_scale(const FieldRationalFunction& a, const CycloFieldElement& c) {
    return FieldRationalFunction(scale(a.num(), c), a.den());
}

FieldRationalFunction frf_subst_inverse(const FieldRationalFunction& f) {
    if (f.is_zero()) return f;
    long dn = f.num().degree(), dd = f.den().degree();
    FieldPoly num = reversed(f.num());
    FieldPoly den = reversed(f.den());
    if (dd > dn)
        num = mul_apow(num, dd - dn);
    else if (dn > dd)
        den = mul_apow(den, dn - dd);
    return FieldRationalFunction(std::move(num), std::move(den));
}

std::vector<CycloFieldElement> frf_taylor_at_one(const FieldRationalFunction& f, long order) {
    const long n = f.n();
    FieldPoly num = shift_by_one(f.num());
    FieldPoly den = shift_by_one(f.den());
    if (den.is_zero() || den.coeffs()[0].is_zero())
        throw std::domain_error("evaluation at pole");
    const CycloFieldElement d0_inv = den.coeffs()[0].inverse();
    const auto zero = CycloFieldElement::from_rational(n, BigRational(0));
    std::vector<CycloFieldElement> out(static_cast<size_t>(order) + 1, zero);
    auto coeff_of = [&](const FieldPoly& p, long i) {
        return i <= p.degree() ? p.coeffs()[static_cast<size_t>(i)] : zero;
    };
    for (long i = 0; i <= order; ++i) {
        CycloFieldElement acc = coeff_of(num, i);
        for (long j = 1; j <= i; ++j)
            acc = acc - coeff_of(den, j) * out[static_cast<size_t>(i - j)];
        out[static_cast<size_t>(i)] = acc * d0_inv;
    }
    return out;
}

}  // namespace qsc
