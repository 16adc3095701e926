// End-to-end acceptance suite: one pass/fail line per criterion.
//
//   acceptance [path-to-cli] [data-dir]
//
// The CLI path enables the report-determinism part of criterion 9; the data
// dir must hold ap_half_half.txt. Exit status is nonzero if any criterion
// fails.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <regex>
#include <sstream>
#include <vector>

#include "qsc/checks.hpp"
#include "qsc/identities.hpp"
#include "qsc/padic.hpp"
#include "qsc/report.hpp"

using namespace qsc;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void criterion(int idx, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << what;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    for (const auto& n : g_notes) std::cout << "       " << n << std::endl;
    g_notes.clear();
    if (!ok) ++g_failures;
}

void note(const std::string& s) { g_notes.push_back(s); }

bool admissible(const HypCase& c, long n) { return n > 1 && std::gcd(n, c.d) == 1; }

std::string strip_elapsed(std::string s) {
    return std::regex_replace(s, std::regex("\"elapsed_ms\":[0-9]+"), "\"elapsed_ms\":0");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

DensePoly P(std::initializer_list<long> cs) {
    std::vector<BigRational> v;
    for (long c : cs) v.emplace_back(c);
    return DensePoly::from_coeffs(std::move(v));
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";
    const std::string data_dir = argc > 2 ? argv[2] : "data";
    const HypCase half = make_case(make_rational(1, 2), make_rational(1, 2));
    const HypCase cm_case = make_case(make_rational(1, 4), make_rational(1, 3));

    // ---- 1: main theorem coverage (scan reused by criterion 8) ----
    std::vector<CheckResult> main_scan;
    {
        bool ok = true;
        for (const auto& c : case_registry())
            for (long n = 2; n <= 7; ++n) {
                if (!admissible(c, n)) continue;
                main_scan.push_back(check_main(c, 2, 1, n));
                ok = ok && main_scan.back().pass;
            }
        long combos = static_cast<long>(main_scan.size());
        for (long n : {3L, 5L})
            for (long B : {1L, 2L}) {
                ok = ok && check_main(half, 3, B, n).pass;
                ++combos;
            }
        criterion(1, "main congruence mod Phi_n^3 across the fourteen cases", ok,
                  std::to_string(combos) + " (case,A,B,n) combinations");
    }

    // ---- 2: companion congruences ----
    {
        bool ok = true;
        long combos = 0;
        for (const auto& c : case_registry())
            for (long n = 2; n <= 5; ++n) {
                if (!admissible(c, n)) continue;
                auto [d0, d1] = check_companion(c, 2, 1, n);
                ok = ok && d0.pass && d1.pass;
                ++combos;
            }
        auto [d0, d1noC] = check_companion(half, 2, 1, 5, /*with_correction=*/false);
        bool falsifier = d0.pass && !d1noC.pass;
        criterion(2, "companion congruences mod Phi_n^2 and corrected mod Phi_n^3",
                  ok && falsifier,
                  std::to_string(combos) +
                      " combinations; dropping C(A,B) breaks mod Phi_n^3 at n=5: " +
                      (falsifier ? "yes" : "no"));
    }

    // ---- 3: lemma suite ----
    {
        bool ok = true;
        for (long n : {3L, 5L, 7L}) {
            for (long l : {0L, 1L, 2L})
                ok = ok && verify_lemma(LemmaId::n2, n, HalfInteger::of(l)).pass;
            CheckResult mh = verify_lemma(LemmaId::minus_half, n);
            ok = ok && mh.pass && mh.achieved.inf;
            for (long l : {1L, 2L}) ok = ok && verify_lemma(LemmaId::Q, n, HalfInteger::of(l)).pass;
            ok = ok && verify_lemma(LemmaId::eval, n).pass;
            ok = ok && verify_lemma(LemmaId::spec, n).pass;
            ok = ok && verify_lemma(LemmaId::more, n).pass;
            ok = ok && verify_lemma(LemmaId::half_square, n).pass;
            for (long t : {1L, 2L})
                ok = ok && verify_lemma(LemmaId::ver, n, HalfInteger::halves(t)).pass;
        }
        criterion(3, "the (1/2,1/2) lemma chain at n in {3,5,7}", ok,
                  "minus_half is an exact identity (infinite valuation)");
    }

    // ---- 4: termwise congruence ----
    {
        bool ok = true;
        for (long n : {3L, 5L, 7L})
            for (long t : {-1L, 2L, 4L})
                ok = ok && check_termwise(half, HalfInteger::halves(t), n).pass;
        ok = ok && check_termwise(make_case(make_rational(1, 3), make_rational(1, 3)),
                                  HalfInteger::of(1), 2).pass;
        ok = ok && check_termwise(make_case(make_rational(1, 4), make_rational(1, 2)),
                                  HalfInteger::of(1), 3).pass;
        ok = ok && check_termwise(make_case(make_rational(1, 5), make_rational(2, 5)),
                                  HalfInteger::of(1), 2).pass;
        criterion(4, "termwise congruences (half-integer and integer shifts)", ok);
    }

    // ---- 5: homework identities ----
    {
        bool ok = true;
        const std::vector<HypCase> beau_cases = {
            half, make_case(make_rational(1, 3), make_rational(1, 3)),
            make_case(make_rational(1, 4), make_rational(1, 3)),
            make_case(make_rational(1, 3), make_rational(1, 5))};
        for (const auto& c : beau_cases)
            for (long n : {2L, 3L, 5L}) {
                if (std::gcd(n, c.d) != 1) continue;
                CheckResult r = check_beau(c.r1, c.r2, n);
                ok = ok && r.pass && r.achieved.inf;
            }
        for (long rb : {2L, 3L})
            for (long n : {3L, 5L}) {
                if (std::gcd(n, 2 * rb) != 1) continue;
                ok = ok && check_beau2(make_rational(1, rb), n).pass;
            }
        for (long n = 1; n <= 11; n += 2) {
            auto t = ratio_taylor(n, 3);
            const BigRational c = make_rational(-(n * n - 1), 24);
            ok = ok && t[0] == 1 && t[1] == 0 && t[2] == c && t[3] == c;
        }
        criterion(5, "root-of-unity identities hold exactly; Taylor data matches", ok);
    }

    // ---- 6: Dwork quotients ----
    {
        bool ok = true;
        std::vector<std::string> excluded;
        for (const auto& c : case_registry())
            for (long p : {5L, 7L}) {
                if (std::gcd(p, c.d) != 1) continue;
                try {
                    ok = ok && dwork_check(c, p, 1).pass;
                } catch (const std::domain_error& e) {
                    excluded.push_back(c.str() + " p=" + std::to_string(p) + " (" + e.what() + ")");
                }
            }
        CheckResult s1 = dwork_check(half, 3, 1);
        CheckResult s2 = dwork_check(half, 3, 2);
        ok = ok && s1.pass && s2.pass;
        note("mod p^{3s} observation at (1/2,1/2), p=3, s=2: achieved " + s2.achieved.str() +
             (s2.achieved.at_least(6) ? " (>= 6)" : " (< 6)"));
        for (const auto& e : excluded) note("excluded by the unit-root hypothesis: " + e);

        bool h3_exact = h_classical(half, 3) == make_rational(4433, 4096);
        bool h3_mod = padic_reduce(h_classical(half, 3), 3, 3).symmetric() == -4;
        criterion(6, "Dwork quotient congruences mod p^3; H(3) anchors reproduce",
                  ok && h3_exact && h3_mod,
                  "H(3) = 4433/4096 == -4 (mod 27); " + std::to_string(excluded.size()) +
                      " combo(s) excluded by hypothesis");
    }

    // ---- 7: CM case ----
    {
        bool ok = cm_check(7).pass && cm_check(13).pass;
        CoeffTable t = eta_cm_coeffs(10);
        ok = ok && t.at(1) == 1 && t.at(2) == 0 && t.at(7) == 20 && t.at(5) == 0;
        criterion(7, "CM supercongruence mod p^4 at p in {7,13}; eta expansion anchors", ok);
    }

    // ---- 8: sharpness and the negative control ----
    {
        bool exact3 = false;
        std::string where;
        for (const auto& r : main_scan) {
            if (r.kase->r1 == cm_case.r1 && r.kase->r2 == cm_case.r2) continue;
            if (!r.achieved.inf && r.achieved.v == 3 && !exact3) {
                where = r.kase->str() + " at n=" + std::to_string(r.params.at("n"));
                exact3 = true;
            }
        }
        if (exact3) {
            CheckResult probe = sharpness_probe(half, 2, 1, 3);
            exact3 = probe.probe && !probe.pass;  // the probe itself reports the miss
        }
        ControlOutcome control =
            negative_control_scan(make_case(make_rational(1, 5), make_rational(1, 5)));
        bool refuted = !control.inconclusive();
        for (const auto& r : main_scan)
            if (r.kase->r1 == cm_case.r1 && r.kase->r2 == cm_case.r2 && r.params.at("n") % 3 == 1)
                note("CM-excess observation: (1/4,1/3) n=" + std::to_string(r.params.at("n")) +
                     " achieved " + r.achieved.str());
        criterion(8, "sharpness of the cube modulus; (1/5,1/5) control refuted", exact3 && refuted,
                  "achieved exactly 3 at " + where + "; control " +
                      (refuted ? "refuted at n=" + std::to_string(*control.refuted_at)
                               : "inconclusive"));
    }

    // ---- 9: infrastructure invariants + report determinism ----
    {
        bool ok = true;

        for (long n : {2L, 3L, 5L}) {
            DensePoly u = P({1, 1, 3}), v = P({2, 1});
            DensePoly a = mul(cyclotomic(n), u), b = mul(pow_poly(cyclotomic(n), 2), v);
            Valuation va = phi_valuation(a, n), vb = phi_valuation(b, n);
            ok = ok && phi_valuation(mul(a, b), n) == Valuation::finite(va.v + vb.v);
        }

        for (const auto& c : case_registry())
            for (long k = 1; k <= 6; ++k) {
                RationalFunction t = c_term(c, k);
                ok = ok && rf_subst_inverse(t) == t;
            }

        for (long n = 3; n <= 9; n += 2)
            for (long k = 0; k < 3 * n; ++k) {
                if (k % n <= (n - 1) / 2) continue;
                ok = ok && rf_phi_valuation(c_term(half, k), n).at_least(4);
            }

        for (const auto& c : case_registry())
            for (long N = 1; N <= 5; ++N)
                ok = ok && rf_eval(h_sum(c, N, 1), BigRational(1)) == h_classical(c, N);

        bool det = true;
        if (!cli_path.empty()) {
            const std::string out1 = "acc_rep_1.jsonl", out4 = "acc_rep_4.jsonl";
            const std::string base = "\"" + cli_path +
                                     "\" verify-lemmas --n 3,5 --lemma Q --lemma eval "
                                     "--lemma minus_half ";
            int rc1 = std::system((base + "--jobs 1 --out " + out1).c_str());
            int rc4 = std::system((base + "--jobs 4 --out " + out4).c_str());
            std::string rep1 = strip_elapsed(slurp(out1)), rep4 = strip_elapsed(slurp(out4));
            det = rc1 == 0 && rc4 == 0 && !rep1.empty() && rep1 == rep4;
            std::remove(out1.c_str());
            std::remove(out4.c_str());

            const std::string rv_cmd = "\"" + cli_path + "\" rv --case 1/2,1/2 --p 3,5,7 " +
                                       "--coeff-file \"" + data_dir +
                                       "/ap_half_half.txt\" --out acc_rv.jsonl";
            int rc_rv = std::system(rv_cmd.c_str());
            std::string rv_out = slurp("acc_rv.jsonl");
            std::remove("acc_rv.jsonl");
            det = det && rc_rv == 0 && rv_out.find("\"pass\":true") != std::string::npos;
        } else {
            note("CLI path not supplied; determinism subprocess check skipped");
        }
        criterion(9, "module invariants; CLI report determinism under parallelism {1,4}",
                  ok && det);
    }

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << std::endl;
    return g_failures == 0 ? 0 : 1;
}
