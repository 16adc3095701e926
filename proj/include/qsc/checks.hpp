#pragma once

#include "qsc/check_result.hpp"

namespace qsc {

/// H(An;q)/H(Bn;q) == H(A;q^{n^2})/H(B;q^{n^2}) mod Phi_n^3, evaluated as the
/// Phi_n-adic valuation of the cross-multiplied difference.
/// Throws "n not coprime to d" / "non-unit denominator" per the preconditions.
CheckResult check_main(const HypCase& c, long A, long B, long n);

/// C_{r1,r2}(A,B) from the classical q=1 values.
BigRational compute_CAB(const HypCase& c, long A, long B);

/// First result: mod Phi_n^2 against H(A;q^n)/H(B;q^n); second: mod Phi_n^3
/// with the correction C(A,B)(n^2-1)(q^n-1)^2. `with_correction = false` drops
/// the correction term from the second check (an intentional falsifier; the
/// result is then marked as a probe).
std::pair<CheckResult, CheckResult> check_companion(const HypCase& c, long A, long B, long n,
                                                    bool with_correction = true);

/// Termwise congruence: for integer l the reduction of the main theorem to a
/// single block of n terms; for half-integer l the (1/2,1/2) closed form
/// c((n-1)/2)^{2l} - l(2l+1)(n^2-1)(q^n-1)^2/6 against Q(l;q).
CheckResult check_termwise(const HypCase& c, HalfInteger l, long n);

enum class LemmaId { n2, minus_half, Q, eval, spec, more, half_square, ver };
LemmaId parse_lemma_id(const std::string& s);
std::string lemma_id_str(LemmaId id);
const std::vector<LemmaId>& all_lemma_ids();
bool lemma_needs_l(LemmaId id);

/// The (1/2,1/2) lemma chain, each verified at its stated modulus (exactly,
/// with infinite required valuation, for minus_half). `l` is required for
/// n2, Q and ver.
CheckResult verify_lemma(LemmaId id, long n, std::optional<HalfInteger> l = std::nullopt);

/// Reports the achieved valuation of the main congruence against required 4;
/// expected to fail at generic n outside the CM case. Never gates exit status.
CheckResult sharpness_probe(const HypCase& c, long A, long B, long n);

struct ControlOutcome {
    std::vector<CheckResult> results;
    std::optional<long> refuted_at;  // first n where the main congruence fails
    bool inconclusive() const { return !refuted_at.has_value(); }
};
/// Runs check_main over the window n in {2..7} with gcd(n,d)=1 for a
/// (presumably non-member) case. Absence of a failure is inconclusive, not a
/// pass.
ControlOutcome negative_control_scan(const HypCase& c, long A = 2, long B = 1);

}  // namespace qsc
