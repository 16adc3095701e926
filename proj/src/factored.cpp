#include "qsc/factored.hpp"

#include <stdexcept>

namespace qsc {

CycloProduct CycloProduct::zero_value() {
    CycloProduct p;
    p.zero_ = true;
    return p;
}

void CycloProduct::bump(long m, long count) {
    auto it = fac_.find(m);
    long v = (it == fac_.end() ? 0 : it->second) + count;
    if (v == 0) {
        if (it != fac_.end()) fac_.erase(it);
    } else {
        fac_[m] = v;
    }
}

void CycloProduct::mul_one_minus(long m, long count) {
    if (zero_ || count == 0) return;
    if (m == 0) {
        *this = zero_value();
        return;
    }
    if (m > 0) {
        if (count & 1) sign_ = -sign_;
        bump(m, count);
    } else {
        qpow_ += m * count;
        bump(-m, count);
    }
}

void CycloProduct::div_one_minus(long m, long count) {
    if (zero_) return;
    if (m == 0) throw std::domain_error("zero divisor");
    mul_one_minus(m, -count);
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& o) {
    if (zero_ || o.zero_) {
        *this = zero_value();
        return *this;
    }
    sign_ *= o.sign_;
    qpow_ += o.qpow_;
    for (const auto& [m, e] : o.fac_) bump(m, e);
    return *this;
}

CycloProduct& CycloProduct::operator/=(const CycloProduct& o) {
    if (o.zero_) throw std::domain_error("zero divisor");
    if (zero_) return *this;
    sign_ *= o.sign_;
    qpow_ -= o.qpow_;
    for (const auto& [m, e] : o.fac_) bump(m, -e);
    return *this;
}

CycloProduct CycloProduct::pow(long e) const {
    if (zero_) {
        if (e <= 0) throw std::domain_error("zero divisor");
        return *this;
    }
    CycloProduct out;
    out.sign_ = (e % 2 == 0) ? 1 : sign_;
    out.qpow_ = qpow_ * e;
    for (const auto& [m, c] : fac_)
        if (c * e != 0) out.fac_[m] = c * e;
    return out;
}

void CycloProduct::scale_exponents(long e) {
    if (e < 1) throw std::invalid_argument("composition power must be >= 1");
    if (e == 1 || zero_) return;
    qpow_ *= e;
    std::map<long, long> scaled;
    for (const auto& [m, c] : fac_) scaled[m * e] = c;
    fac_ = std::move(scaled);
}

long CycloProduct::phi_exponent(long n) const {
    long out = 0;
    for (const auto& [m, e] : fac_)
        if (m % n == 0) out += e;
    return out;
}

DensePoly expand_phi_powers(std::map<long, long> exps) {
    DensePoly acc(BigRational(1));
    while (!exps.empty()) {
        const long m = exps.rbegin()->first;
        bool full = true;
        std::vector<long> divs = divisors(m);
        for (long d : divs)
            if (exps.find(d) == exps.end()) {
                full = false;
                break;
            }
        if (full) {
            acc = shift_mul_qpow_minus_one(acc, m);
            for (long d : divs) {
                auto it = exps.find(d);
                if (--it->second == 0) exps.erase(it);
            }
        } else {
            acc = mul(acc, cyclotomic(m));
            auto it = exps.find(m);
            if (--it->second == 0) exps.erase(it);
        }
    }
    return acc;
}

CycloProduct::Expanded CycloProduct::expand() const {
    Expanded out;
    if (zero_) {
        out.den = DensePoly(BigRational(1));
        return out;
    }
    std::map<long, long> num_phi, den_phi;
    for (const auto& [m, e] : fac_)
        for (long d : divisors(m)) {
            long v = (num_phi.count(d) ? num_phi[d] : 0) + e;
            if (v == 0)
                num_phi.erase(d);
            else
                num_phi[d] = v;
        }
    for (auto it = num_phi.begin(); it != num_phi.end();) {
        if (it->second < 0) {
            den_phi[it->first] = -it->second;
            it = num_phi.erase(it);
        } else {
            ++it;
        }
    }
    out.num = expand_phi_powers(std::move(num_phi));
    if (sign_ < 0) out.num = neg(out.num);
    if (qpow_ > 0) out.num = mul_qpow(out.num, qpow_);
    out.den = expand_phi_powers(den_phi);
    if (qpow_ < 0) out.den = mul_qpow(out.den, -qpow_);
    out.den_fact.q_pow = qpow_ < 0 ? -qpow_ : 0;
    out.den_fact.phi = std::move(den_phi);
    return out;
}

}  // namespace qsc
