#pragma once

#include "qsc/poly.hpp"

namespace qsc {

/// Element of Q(zeta_n) as the canonical residue mod Phi_n(q); Phi_n is
/// irreducible over Q, so nonzero elements invert via the extended Euclid.
class CycloFieldElement {
public:
    CycloFieldElement() : n_(1) {}
    CycloFieldElement(long n, DensePoly rep);
    static CycloFieldElement from_rational(long n, const BigRational& c);
    static CycloFieldElement zeta_pow(long n, long e);

    long n() const { return n_; }
    const DensePoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }
    bool is_rational() const { return rep_.is_constant(); }

    CycloFieldElement inverse() const;
    bool operator==(const CycloFieldElement& o) const { return n_ == o.n_ && rep_ == o.rep_; }
    bool operator!=(const CycloFieldElement& o) const { return !(*this == o); }

    friend CycloFieldElement operator+(const CycloFieldElement&, const CycloFieldElement&);
    friend CycloFieldElement operator-(const CycloFieldElement&, const CycloFieldElement&);
    friend CycloFieldElement operator*(const CycloFieldElement&, const CycloFieldElement&);
    friend CycloFieldElement operator/(const CycloFieldElement&, const CycloFieldElement&);
    friend CycloFieldElement operator-(const CycloFieldElement&);

private:
    long n_;
    DensePoly rep_;
};

CycloFieldElement pow_elem(const CycloFieldElement& b, long e);

/// Dense polynomial in an auxiliary variable a with Q(zeta_n) coefficients.
class FieldPoly {
public:
    explicit FieldPoly(long n) : n_(n) {}
    FieldPoly(long n, std::vector<CycloFieldElement> cs);
    static FieldPoly constant(long n, const CycloFieldElement& c);
    /// 1 - c*a
    static FieldPoly one_minus_linear(long n, const CycloFieldElement& c);

    long n() const { return n_; }
    bool is_zero() const { return coeff_.empty(); }
    bool is_constant() const { return coeff_.size() <= 1; }
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }
    const std::vector<CycloFieldElement>& coeffs() const { return coeff_; }
    const CycloFieldElement& leading() const;
    CycloFieldElement eval(const CycloFieldElement& x) const;
    CycloFieldElement eval_one() const;

    bool operator==(const FieldPoly& o) const { return n_ == o.n_ && coeff_ == o.coeff_; }

    friend FieldPoly operator+(const FieldPoly&, const FieldPoly&);
    friend FieldPoly operator-(const FieldPoly&, const FieldPoly&);
    friend FieldPoly operator*(const FieldPoly&, const FieldPoly&);
    friend FieldPoly scale(const FieldPoly&, const CycloFieldElement&);
    friend FieldPoly reversed(const FieldPoly&);
    friend FieldPoly mul_apow(const FieldPoly&, long);

private:
    long n_;
    std::vector<CycloFieldElement> coeff_;
    void trim();
};

std::pair<FieldPoly, FieldPoly> divrem(const FieldPoly& a, const FieldPoly& b);
FieldPoly gcd_field(FieldPoly a, FieldPoly b);  // monic
FieldPoly monic(const FieldPoly& p);
FieldPoly pow_fp(const FieldPoly& p, long e);
/// p(1 + t) as a polynomial in t.
FieldPoly shift_by_one(const FieldPoly& p);

/// Reduced fraction of FieldPoly (den monic).
class FieldRationalFunction {
public:
    explicit FieldRationalFunction(long n);
    FieldRationalFunction(FieldPoly num, FieldPoly den);

    long n() const { return num_.n(); }
    const FieldPoly& num() const { return num_; }
    const FieldPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const FieldRationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

private:
    FieldPoly num_, den_;
};

FieldRationalFunction frf_mul(const FieldRationalFunction&, const FieldRationalFunction&);
FieldRationalFunction frf_div(const FieldRationalFunction&, const FieldRationalFunction&);
FieldRationalFunction frf_scale(const FieldRationalFunction&, const CycloFieldElement&);
/// f(1/a).
FieldRationalFunction frf_subst_inverse(const FieldRationalFunction& f);
/// Taylor coefficients in (a-1) up to `order`, requires den nonzero at a=1.
std::vector<CycloFieldElement> frf_taylor_at_one(const FieldRationalFunction& f, long order);

}  // namespace qsc
