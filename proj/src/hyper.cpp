#include "qsc/hyper.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qsc {

long HalfInteger::integer() const {
    if (!is_integer()) throw std::domain_error("not an integer");
    return twice / 2;
}

std::string HalfInteger::str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

HalfInteger parse_half_integer(const std::string& s) {
    BigRational r = parse_fraction(s);
    BigRational doubled = r * 2;
    if (doubled.get_den() != 1 || !doubled.get_num().fits_slong_p())
        throw std::invalid_argument("not a half-integer: " + s);
    return HalfInteger{doubled.get_num().get_si()};
}

HypCase make_case(const BigRational& r1, const BigRational& r2) {
    if (r1 <= 0 || r1 >= 1 || r2 <= 0 || r2 >= 1)
        throw std::invalid_argument("parameters must lie in (0,1)");
    HypCase c;
    c.r1 = r1;
    c.r2 = r2;
    long d1 = r1.get_den().get_si(), d2 = r2.get_den().get_si();
    c.d = std::lcm(d1, d2);
    c.mu = r1 * (1 - r1) + r2 * (1 - r2);
    for (const HypCase& m : case_registry())
        if (m.r1 == r1 && m.r2 == r2) {
            c.member = true;
            break;
        }
    return c;
}

const std::vector<HypCase>& case_registry() {
    static const std::vector<HypCase> cases = [] {
        std::vector<std::pair<BigRational, BigRational>> pairs;
        const std::array<BigRational, 4> basic = {make_rational(1, 2), make_rational(1, 3),
                                                  make_rational(1, 4), make_rational(1, 6)};
        for (const auto& a : basic)
            for (const auto& b : basic)
                if (a <= b) pairs.emplace_back(a, b);
        pairs.emplace_back(make_rational(1, 5), make_rational(2, 5));
        pairs.emplace_back(make_rational(1, 8), make_rational(3, 8));
        pairs.emplace_back(make_rational(1, 10), make_rational(3, 10));
        pairs.emplace_back(make_rational(1, 12), make_rational(5, 12));
        std::sort(pairs.begin(), pairs.end());
        std::vector<HypCase> out;
        for (const auto& [a, b] : pairs) {
            HypCase c;
            c.r1 = a;
            c.r2 = b;
            c.d = std::lcm(a.get_den().get_si(), b.get_den().get_si());
            c.mu = a * (1 - a) + b * (1 - b);
            c.member = true;
            out.push_back(c);
        }
        return out;
    }();
    return cases;
}

std::array<long, 4> case_exponents(const HypCase& c) {
    auto ex = [&](const BigRational& r) {
        BigRational x = r * c.d;
        return x.get_num().get_si();
    };
    return {ex(c.r1), ex(1 - c.r1), ex(c.r2), ex(1 - c.r2)};
}

CycloProduct c_term_factored(const HypCase& c, long k, long e) {
    if (k < 0) throw std::invalid_argument("term index must be >= 0");
    const auto exps = case_exponents(c);
    CycloProduct p;
    p.mul_q_pow(c.d * k * e);
    for (long j = 0; j < k; ++j) {
        for (long a : exps) p.mul_one_minus(e * (a + c.d * j));
        p.div_one_minus(e * c.d * (j + 1), 4);
    }
    return p;
}

RationalFunction c_term(const HypCase& c, long k) {
    return RationalFunction::from_factored(c_term_factored(c, k));
}

namespace {
std::map<std::string, RationalFunction> g_hsum_cache;
std::mutex g_hsum_mutex;
}  // namespace

RationalFunction h_sum(const HypCase& c, long N, long e) {
    if (N < 1 || e < 1) throw std::invalid_argument("h_sum requires N >= 1, e >= 1");
    const std::string key = c.str() + ";" + std::to_string(N) + ";" + std::to_string(e);
    {
        std::lock_guard<std::mutex> lk(g_hsum_mutex);
        auto it = g_hsum_cache.find(key);
        if (it != g_hsum_cache.end()) return it->second;
    }

    const auto exps = case_exponents(c);
    // suffix[k] = prod_{j=k+1}^{N-1} (1 - q^{e d j})^4: the cofactor that
    // brings the kth term onto the common denominator.
    std::vector<DensePoly> suffix(static_cast<size_t>(N));
    suffix[N - 1] = DensePoly(BigRational(1));
    for (long k = N - 2; k >= 0; --k) {
        DensePoly s = suffix[k + 1];
        for (int i = 0; i < 4; ++i) s = shift_mul_one_minus_qpow(s, e * c.d * (k + 1));
        suffix[k] = std::move(s);
    }
    DensePoly num;
    DensePoly prefix(BigRational(1));  // q^{edk} * prod_{j<k} of the 4 numerator factors
    for (long k = 0; k < N; ++k) {
        if (k > 0) {
            for (long a : exps) prefix = shift_mul_one_minus_qpow(prefix, e * (a + c.d * (k - 1)));
            prefix = mul_qpow(prefix, e * c.d);
        }
        num = add(num, mul(prefix, suffix[k]));
    }
    DensePoly den = suffix[0];  // monic: an even count of (1 - q^m) factors
    DenFactors fact;
    for (long j = 1; j <= N - 1; ++j)
        for (long dd : divisors(e * c.d * j)) fact.phi[dd] += 4;

    // cancel shared cyclotomic powers
    if (num.is_zero()) throw std::logic_error("vanishing hypergeometric sum");
    for (auto it = fact.phi.begin(); it != fact.phi.end();) {
        long v = phi_valuation_bounded(num, it->first, it->second);
        if (v > 0) {
            const DensePoly pw = pow_poly(cyclotomic(it->first), v);
            num = divexact(num, pw);
            den = divexact(den, pw);
            it->second -= v;
        }
        if (it->second == 0)
            it = fact.phi.erase(it);
        else
            ++it;
    }
    RationalFunction out = RationalFunction::reduced(std::move(num), std::move(den), fact);
    {
        std::lock_guard<std::mutex> lk(g_hsum_mutex);
        g_hsum_cache.emplace(key, out);
    }
    return out;
}

CycloProduct term_ratio_factored(const HypCase& c, HalfInteger l, long n, long k) {
    if (k < 0) throw std::invalid_argument("term index must be >= 0");
    // shift = d*l*n must be an integer exponent
    long num_twice = c.d * l.twice * n;
    if (num_twice % 2 != 0)
        throw std::domain_error("half-integer not admissible for this case/n");
    const long shift = num_twice / 2;
    const auto exps = case_exponents(c);
    CycloProduct p;
    p.mul_q_pow(c.d * k);
    for (long j = 0; j < k; ++j) {
        for (long a : exps) p.mul_one_minus(a + shift + c.d * j);
        long dm = c.d * (j + 1) + shift;
        if (dm == 0) throw std::domain_error("zero denominator factor in term ratio");
        p.div_one_minus(dm, 4);
    }
    return p;
}

RationalFunction term_ratio(const HypCase& c, HalfInteger l, long n, long k) {
    return RationalFunction::from_factored(term_ratio_factored(c, l, n, k));
}

RationalFunction harmonic_s(long k, int which) {
    if (k < 0) throw std::invalid_argument("harmonic index must be >= 0");
    if (which != 1 && which != 2) throw std::invalid_argument("harmonic sum selector");
    RationalFunction acc;
    auto simple = [](long num_pow, long den_base, int den_exp) {
        // q^{num_pow} / (1 - q^{den_base})^{den_exp}
        CycloProduct p;
        p.mul_q_pow(num_pow);
        p.div_one_minus(den_base, den_exp);
        return RationalFunction::from_factored(p);
    };
    if (which == 1) {
        for (long j = 1; j <= 2 * k; ++j) acc = acc + simple(j, j, 1);
        for (long j = 1; j <= k; ++j) acc = acc - rf_scale(simple(2 * j, 2 * j, 1), 2);
    } else {
        for (long j = 1; j <= 2 * k; ++j) acc = acc + simple(2 * j, j, 2);
        for (long j = 1; j <= k; ++j) acc = acc - rf_scale(simple(4 * j, 2 * j, 2), 2);
    }
    return acc;
}

namespace {
const HypCase& half_half() {
    static const HypCase c = make_case(make_rational(1, 2), make_rational(1, 2));
    return c;
}
}  // namespace

std::pair<RationalFunction, RationalFunction> sigma_sums(long n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("sigma sums require odd n");
    const long m = (n - 1) / 2;
    const HypCase& c = half_half();
    RationalFunction den, num1, num2;
    for (long k = 0; k <= m; ++k) {
        RationalFunction ck = c_term(c, k);
        RationalFunction s1 = harmonic_s(k, 1);
        RationalFunction s2 = harmonic_s(k, 2);
        den = den + ck;
        num1 = num1 + ck * s1;
        num2 = num2 + ck * (rf_scale(s1 * s1, 4) - s2);
    }
    return {num1 / den, num2 / den};
}

RationalFunction q_quotient(HalfInteger l, long n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("quotient requires odd n");
    const long m = (n - 1) / 2;
    const HypCase& c = half_half();
    RationalFunction num, den;
    for (long k = 0; k <= m; ++k) {
        num = num + term_ratio(c, l, n, k);
        den = den + c_term(c, k);
    }
    return num / den;
}

}  // namespace qsc
