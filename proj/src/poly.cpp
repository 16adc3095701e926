#include "qsc/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qsc {

DensePoly::DensePoly(const BigRational& c0) {
    if (c0 != 0) coeff_.push_back(c0);
}

DensePoly DensePoly::monomial(long e, const BigRational& c) {
    DensePoly p;
    if (c == 0) return p;
    p.coeff_.assign(static_cast<size_t>(e) + 1, BigRational(0));
    p.coeff_.back() = c;
    return p;
}

DensePoly DensePoly::from_coeffs(std::vector<BigRational> cs) {
    DensePoly p;
    p.coeff_ = std::move(cs);
    p.trim();
    return p;
}

void DensePoly::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

const BigRational& DensePoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero");
    return coeff_.back();
}

BigRational DensePoly::coeff(long i) const {
    if (i < 0 || i > degree()) return BigRational(0);
    return coeff_[static_cast<size_t>(i)];
}

long DensePoly::q_order() const {
    for (size_t i = 0; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return static_cast<long>(i);
    return 0;
}

BigRational DensePoly::eval(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string DensePoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const BigRational& c = coeff_[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigRational a = abs(c);
        if (a != 1 || i == 0) os << fraction_str(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

DensePoly add(const DensePoly& a, const DensePoly& b) {
    DensePoly r;
    r.coeff_.resize(std::max(a.coeff_.size(), b.coeff_.size()), BigRational(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) r.coeff_[i] = a.coeff_[i];
    for (size_t i = 0; i < b.coeff_.size(); ++i) r.coeff_[i] += b.coeff_[i];
    r.trim();
    return r;
}

DensePoly sub(const DensePoly& a, const DensePoly& b) {
    DensePoly r;
    r.coeff_.resize(std::max(a.coeff_.size(), b.coeff_.size()), BigRational(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) r.coeff_[i] = a.coeff_[i];
    for (size_t i = 0; i < b.coeff_.size(); ++i) r.coeff_[i] -= b.coeff_[i];
    r.trim();
    return r;
}

DensePoly neg(const DensePoly& a) {
    DensePoly r = a;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

DensePoly scale(const DensePoly& a, const BigRational& c) {
    if (c == 0) return DensePoly();
    DensePoly r = a;
    for (auto& x : r.coeff_) x *= c;
    return r;
}

// Classical multiplication through a common-denominator integer pass: rational
// coefficient arithmetic would re-run gcds on every addmul, integer addmul is a
// single mpn call.
DensePoly mul(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    const size_t na = a.coeff_.size(), nb = b.coeff_.size();

    BigInt da(1), db(1);
    for (const auto& c : a.coeff_) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : b.coeff_) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), c.get_den_mpz_t());

    std::vector<BigInt> A(na), B(nb);
    BigInt t;
    for (size_t i = 0; i < na; ++i) {
        mpz_divexact(t.get_mpz_t(), da.get_mpz_t(), a.coeff_[i].get_den_mpz_t());
        A[i] = a.coeff_[i].get_num() * t;
    }
    for (size_t i = 0; i < nb; ++i) {
        mpz_divexact(t.get_mpz_t(), db.get_mpz_t(), b.coeff_[i].get_den_mpz_t());
        B[i] = b.coeff_[i].get_num() * t;
    }

    std::vector<BigInt> R(na + nb - 1);
    for (size_t i = 0; i < na; ++i) {
        if (A[i] == 0) continue;
        for (size_t j = 0; j < nb; ++j) {
            if (B[j] == 0) continue;
            mpz_addmul(R[i + j].get_mpz_t(), A[i].get_mpz_t(), B[j].get_mpz_t());
        }
    }

    BigInt den = da * db;
    DensePoly r;
    r.coeff_.resize(R.size());
    for (size_t i = 0; i < R.size(); ++i) r.coeff_[i] = make_rational(R[i], den);
    r.trim();
    return r;
}

DensePoly shift_mul_qpow_minus_one(const DensePoly& a, long m) {
    if (a.is_zero()) return a;
    if (m <= 0) throw std::invalid_argument("shift exponent must be positive");
    DensePoly r;
    const size_t n = a.coeff_.size(), sm = static_cast<size_t>(m);
    r.coeff_.assign(n + sm, BigRational(0));
    for (size_t i = 0; i < n; ++i) {
        r.coeff_[i + sm] += a.coeff_[i];
        r.coeff_[i] -= a.coeff_[i];
    }
    r.trim();
    return r;
}

DensePoly shift_mul_one_minus_qpow(const DensePoly& a, long m) {
    if (a.is_zero()) return a;
    if (m <= 0) throw std::invalid_argument("shift exponent must be positive");
    DensePoly r;
    const size_t n = a.coeff_.size(), sm = static_cast<size_t>(m);
    r.coeff_.assign(n + sm, BigRational(0));
    for (size_t i = 0; i < n; ++i) {
        r.coeff_[i] += a.coeff_[i];
        r.coeff_[i + sm] -= a.coeff_[i];
    }
    r.trim();
    return r;
}

DensePoly mul_qpow(const DensePoly& a, long m) {
    if (a.is_zero() || m == 0) return a;
    if (m < 0) throw std::invalid_argument("negative q power");
    DensePoly r;
    r.coeff_.assign(static_cast<size_t>(m), BigRational(0));
    r.coeff_.insert(r.coeff_.end(), a.coeff_.begin(), a.coeff_.end());
    return r;
}

DensePoly pow_poly(const DensePoly& a, long e) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    DensePoly acc(BigRational(1)), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

DensePoly compose_power(const DensePoly& a, long e) {
    if (e < 1) throw std::invalid_argument("composition power must be >= 1");
    if (a.is_zero() || e == 1) return a;
    DensePoly r;
    r.coeff_.assign(a.coeff_.size() * static_cast<size_t>(e) - (e - 1), BigRational(0));
    for (size_t i = 0; i < a.coeff_.size(); ++i) r.coeff_[i * e] = a.coeff_[i];
    return r;
}

DensePoly reversed(const DensePoly& a) {
    DensePoly r = a;
    std::reverse(r.coeff_.begin(), r.coeff_.end());
    r.trim();
    return r;
}

DensePoly monic(const DensePoly& a) {
    if (a.is_zero()) return a;
    return scale(a, BigRational(1) / a.leading());
}

std::pair<DensePoly, DensePoly> divrem(const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    if (a.degree() < b.degree()) return {DensePoly(), a};
    std::vector<BigRational> rem = a.coeffs();
    const long db = b.degree();
    const BigRational lead_inv = BigRational(1) / b.leading();
    std::vector<BigRational> quo(rem.size() - db, BigRational(0));
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        BigRational f = rem[i] * lead_inv;
        quo[i - db] = f;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
    }
    return {DensePoly::from_coeffs(std::move(quo)), DensePoly::from_coeffs(std::move(rem))};
}

bool try_divexact(const DensePoly& a, const DensePoly& b, DensePoly& out) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    if (a.is_zero()) {
        out = a;
        return true;
    }
    if (a.degree() < b.degree()) return false;
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) return false;
    out = std::move(q);
    return true;
}

DensePoly divexact(const DensePoly& a, const DensePoly& b) {
    DensePoly out;
    if (!try_divexact(a, b, out)) throw std::domain_error("inexact division");
    return out;
}

// ---------------------------------------------------------------------------
// gcd over Q: modular images with CRT lifting (Brown), exact division check.
// ---------------------------------------------------------------------------

namespace {

// Integer primitive part with positive leading coefficient.
std::vector<BigInt> integer_primitive(const DensePoly& p) {
    BigInt den(1);
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> out(p.coeffs().size());
    BigInt t, content(0);
    for (size_t i = 0; i < out.size(); ++i) {
        mpz_divexact(t.get_mpz_t(), den.get_mpz_t(), p.coeffs()[i].get_den_mpz_t());
        out[i] = p.coeffs()[i].get_num() * t;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (out.back() < 0) content = -content;
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return out;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = mulmod(acc, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return acc;
}

using ModPoly = std::vector<uint64_t>;  // coefficient i of q^i, trailing nonzero

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly to_mod(const std::vector<BigInt>& p, uint64_t prime) {
    ModPoly out(p.size());
    BigInt t;
    for (size_t i = 0; i < p.size(); ++i) {
        mpz_mod_ui(t.get_mpz_t(), p[i].get_mpz_t(), prime);
        out[i] = t.get_ui();
    }
    mp_trim(out);
    return out;
}

// In-place a mod b (b monic-scaled internally), degrees shrink each step.
ModPoly mp_gcd(ModPoly a, ModPoly b, uint64_t p) {
    while (!b.empty()) {
        uint64_t inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            uint64_t f = mulmod(a.back(), inv, p);
            size_t off = a.size() - b.size();
            if (f != 0)
                for (size_t j = 0; j < b.size(); ++j) {
                    uint64_t s = mulmod(f, b[j], p);
                    a[off + j] = (a[off + j] + p - s) % p;
                }
            a.pop_back();
            mp_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    // monic
    if (!a.empty()) {
        uint64_t inv = powmod(a.back(), p - 2, p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

const std::vector<uint64_t>& gcd_primes() {
    static const std::vector<uint64_t> primes = [] {
        std::vector<uint64_t> out;
        BigInt p = (BigInt(1) << 62) + 1;
        for (int i = 0; i < 96; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            out.push_back(p.get_ui());
        }
        return out;
    }();
    return primes;
}

DensePoly rationalize_monic(const std::vector<BigInt>& p) {
    std::vector<BigRational> cs(p.size());
    for (size_t i = 0; i < p.size(); ++i) cs[i] = BigRational(p[i]);
    return monic(DensePoly::from_coeffs(std::move(cs)));
}

std::vector<BigInt> primitive_int(std::vector<BigInt> v) {
    BigInt content(0);
    for (const auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 0) return v;
    if (v.back() < 0) content = -content;
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return v;
}

bool divides_int(const std::vector<BigInt>& g, const std::vector<BigInt>& a) {
    std::vector<BigRational> gc(g.size()), ac(a.size());
    for (size_t i = 0; i < g.size(); ++i) gc[i] = BigRational(g[i]);
    for (size_t i = 0; i < a.size(); ++i) ac[i] = BigRational(a[i]);
    DensePoly out;
    return try_divexact(DensePoly::from_coeffs(std::move(ac)), DensePoly::from_coeffs(std::move(gc)),
                        out);
}

// Euclidean fallback; only reachable if the prime pool is exhausted.
DensePoly gcd_euclid(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(a);
}

}  // namespace

DensePoly gcd_poly(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return DensePoly(BigRational(1));

    const std::vector<BigInt> A = integer_primitive(a), B = integer_primitive(b);
    BigInt gamma;
    mpz_gcd(gamma.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());

    std::vector<BigInt> acc;       // symmetric-range CRT accumulator, lc scaled to gamma
    std::vector<BigInt> last_try;  // previous primitive candidate
    BigInt modulus(0);
    long acc_deg = -1;

    for (uint64_t p : gcd_primes()) {
        if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0)
            continue;
        ModPoly g = mp_gcd(to_mod(A, p), to_mod(B, p), p);
        long dg = static_cast<long>(g.size()) - 1;
        if (dg == 0) return DensePoly(BigRational(1));
        uint64_t gm = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        for (auto& c : g) c = mulmod(c, gm, p);

        if (acc_deg < 0 || dg < acc_deg) {
            acc.assign(g.size(), BigInt(0));
            BigInt half_p = BigInt(static_cast<unsigned long>(p)) / 2;
            for (size_t i = 0; i < g.size(); ++i) {
                acc[i] = BigInt(static_cast<unsigned long>(g[i]));
                if (acc[i] > half_p) acc[i] -= static_cast<unsigned long>(p);
            }
            modulus = static_cast<unsigned long>(p);
            acc_deg = dg;
            last_try.clear();
        } else if (dg == acc_deg) {
            BigInt pz(static_cast<unsigned long>(p));
            BigInt minv;
            mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
            BigInt new_mod = modulus * pz, half = new_mod / 2, t;
            for (size_t i = 0; i < acc.size(); ++i) {
                BigInt gi(static_cast<unsigned long>(g[i]));
                t = ((gi - acc[i]) * minv) % pz;
                if (t < 0) t += pz;
                acc[i] += modulus * t;
                if (acc[i] > half) acc[i] -= new_mod;
            }
            modulus = new_mod;
        } else {
            continue;  // unlucky prime
        }

        std::vector<BigInt> cand = primitive_int(acc);
        if (cand == last_try) {
            if (divides_int(cand, A) && divides_int(cand, B)) return rationalize_monic(cand);
        }
        last_try = std::move(cand);
    }
    return gcd_euclid(a, b);
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and Phi_n-adic valuation.
// ---------------------------------------------------------------------------

std::vector<long> divisors(long n) {
    std::vector<long> low, high;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        low.push_back(i);
        if (i != n / i) high.push_back(n / i);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

long euler_phi(long n) {
    long out = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out -= out / p;
        while (n % p == 0) n /= p;
    }
    if (n > 1) out -= out / n;
    return out;
}

namespace {
std::map<long, DensePoly> g_cyclo_cache;
std::mutex g_cyclo_mutex;
}  // namespace

DensePoly cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    {
        std::lock_guard<std::mutex> lk(g_cyclo_mutex);
        auto it = g_cyclo_cache.find(n);
        if (it != g_cyclo_cache.end()) return it->second;
    }
    DensePoly p = shift_mul_qpow_minus_one(DensePoly(BigRational(1)), n);  // q^n - 1
    for (long d : divisors(n))
        if (d != n) p = divexact(p, cyclotomic(d));
    {
        std::lock_guard<std::mutex> lk(g_cyclo_mutex);
        g_cyclo_cache.emplace(n, p);
    }
    return p;
}

Valuation phi_valuation(const DensePoly& p, long n) {
    if (p.is_zero()) return Valuation::infinite();
    const DensePoly phi = cyclotomic(n);
    long v = 0;
    DensePoly cur = p, next;
    while (try_divexact(cur, phi, next)) {
        ++v;
        cur = std::move(next);
    }
    return Valuation::finite(v);
}

long phi_valuation_bounded(const DensePoly& p, long n, long bound) {
    if (p.is_zero()) throw std::domain_error("valuation bound on zero polynomial");
    const DensePoly phi = cyclotomic(n);
    long v = 0;
    DensePoly cur = p, next;
    while (v < bound && try_divexact(cur, phi, next)) {
        ++v;
        cur = std::move(next);
    }
    return v;
}

DensePoly field_inverse(const DensePoly& e, long n, long k) {
    if (k < 1) throw std::invalid_argument("modulus power must be >= 1");
    const DensePoly modulus = pow_poly(cyclotomic(n), k);
    DensePoly r0 = modulus, r1 = divrem(e, modulus).second;
    DensePoly s0, s1(BigRational(1));
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        DensePoly s2 = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.is_zero()) throw std::domain_error("non-invertible residue");
    DensePoly inv = scale(s1, BigRational(1) / r1.leading());
    return divrem(inv, modulus).second;
}

}  // namespace qsc
