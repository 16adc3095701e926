// Command-line driver: builds check plans from subcommand flags, runs them on
// a worker pool and emits JSON-lines or CSV reports.
//
// Exit status: 0 all asserted checks pass, 1 any failure, 2 usage/IO error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <numeric>

#include "qsc/report.hpp"

using namespace qsc;

namespace {

std::vector<long> parse_range(const std::string& s) {
    std::vector<long> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        long lo = std::stol(s.substr(0, dots)), hi = std::stol(s.substr(dots + 2));
        for (long v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    size_t pos = 0;
    while (pos < s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stol(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("empty range");
    return out;
}

HypCase parse_case(const std::string& s) {
    auto sep = s.find(',');
    if (sep == std::string::npos) sep = s.find(':');
    if (sep == std::string::npos)
        throw CLI::ValidationError("--case expects two fractions, e.g. 1/2,1/2");
    return make_case(parse_fraction(s.substr(0, sep)), parse_fraction(s.substr(sep + 1)));
}

std::vector<HypCase> resolve_cases(const std::vector<std::string>& specs) {
    if (specs.empty()) return case_registry();
    std::vector<HypCase> out;
    for (const auto& s : specs) out.push_back(parse_case(s));
    return out;
}

bool admissible(const HypCase& c, long n) { return n > 1 && std::gcd(n, c.d) == 1; }

bool dwork_hypothesis_holds(const HypCase& c, long p) {
    try {
        return padic_reduce(h_classical(c, p), p, 1).residue != 0;
    } catch (const std::domain_error&) {
        return false;  // H(p) not even p-integral
    }
}

void add_default_report_items(std::vector<PlanItem>& items) {
    const auto& reg = case_registry();
    const HypCase half = make_case(make_rational(1, 2), make_rational(1, 2));

    for (const auto& c : reg)
        for (long n = 2; n <= 7; ++n) {
            if (!admissible(c, n)) continue;
            items.push_back({PlanItem::Kind::main, c, 2, 1, n});
            items.push_back({PlanItem::Kind::sharpness, c, 2, 1, n});
            if (n <= 5) items.push_back({PlanItem::Kind::companion, c, 2, 1, n});
        }
    for (long n : {3L, 5L}) {
        items.push_back({PlanItem::Kind::main, half, 3, 1, n});
        items.push_back({PlanItem::Kind::main, half, 3, 2, n});
    }
    items.push_back({PlanItem::Kind::companion_no_correction, half, 2, 1, 5});

    for (long n : {3L, 5L, 7L})
        for (long t : {-1L, 2L, 4L}) {
            PlanItem it{PlanItem::Kind::termwise, half, 2, 1, n};
            it.l = HalfInteger::halves(t);
            items.push_back(it);
        }
    for (const auto& [r1a, r1b, r2a, r2b, n] :
         {std::array<long, 5>{1, 3, 1, 3, 2}, {1, 4, 1, 2, 3}, {1, 5, 2, 5, 2}}) {
        PlanItem it{PlanItem::Kind::termwise,
                    make_case(make_rational(r1a, r1b), make_rational(r2a, r2b)), 2, 1, n};
        it.l = HalfInteger::of(1);
        items.push_back(it);
    }

    for (long n : {3L, 5L, 7L}) {
        for (LemmaId id : {LemmaId::eval, LemmaId::spec, LemmaId::more, LemmaId::half_square,
                           LemmaId::minus_half}) {
            PlanItem it{PlanItem::Kind::lemma, half, 2, 1, n};
            it.lemma = id;
            items.push_back(it);
        }
        for (long lv : {0L, 1L, 2L}) {
            PlanItem it{PlanItem::Kind::lemma, half, 2, 1, n};
            it.lemma = LemmaId::n2;
            it.l = HalfInteger::of(lv);
            items.push_back(it);
        }
        for (long lv : {1L, 2L}) {
            PlanItem it{PlanItem::Kind::lemma, half, 2, 1, n};
            it.lemma = LemmaId::Q;
            it.l = HalfInteger::of(lv);
            items.push_back(it);
        }
        for (long t : {1L, 2L}) {
            PlanItem it{PlanItem::Kind::lemma, half, 2, 1, n};
            it.lemma = LemmaId::ver;
            it.l = HalfInteger::halves(t);
            items.push_back(it);
        }
    }

    const std::vector<HypCase> beau_cases = {
        half, make_case(make_rational(1, 3), make_rational(1, 3)),
        make_case(make_rational(1, 4), make_rational(1, 3)),
        make_case(make_rational(1, 3), make_rational(1, 5))};
    for (const auto& c : beau_cases)
        for (long n : {2L, 3L, 5L}) {
            if (std::gcd(n, c.d) != 1) continue;
            items.push_back({PlanItem::Kind::beau, c, 2, 1, n});
        }
    for (long rb : {2L, 3L})
        for (long n : {3L, 5L}) {
            HypCase rc = make_case(make_rational(1, rb), make_rational(1, rb));
            if (std::gcd(n, 2 * rc.d) != 1) continue;
            items.push_back({PlanItem::Kind::beau2, rc, 2, 1, n});
        }
    for (long n = 1; n <= 11; n += 2) items.push_back({PlanItem::Kind::taylor, std::nullopt, 2, 1, n});

    for (const auto& c : reg)
        for (long p : {5L, 7L}) {
            if (std::gcd(p, c.d) != 1 || !dwork_hypothesis_holds(c, p)) continue;
            PlanItem it{PlanItem::Kind::dwork, c, 2, 1, 0};
            it.p = p;
            it.s = 1;
            items.push_back(it);
        }
    for (long s : {1L, 2L}) {
        PlanItem it{PlanItem::Kind::dwork, half, 2, 1, 0};
        it.p = 3;
        it.s = s;
        items.push_back(it);
    }

    for (long p : {7L, 13L}) {
        PlanItem it{PlanItem::Kind::cm, std::nullopt, 2, 1, 0};
        it.p = p;
        items.push_back(it);
    }
    for (long p : {5L, 11L}) {
        PlanItem it{PlanItem::Kind::cm_ap_zero, std::nullopt, 2, 1, 0};
        it.p = p;
        items.push_back(it);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of truncated q-hypergeometric supercongruences"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string output = "json-lines", out_path;
    int jobs = 0;
    app.add_option("--output", output, "json-lines or csv")
        ->check(CLI::IsMember({"json-lines", "csv"}));
    app.add_option("--out", out_path, "write the report to a file (default stdout)");
    app.add_option("--jobs", jobs, "worker threads (default: QSC_JOBS or hardware)");

    std::vector<std::string> case_specs, l_specs, lemma_specs, r_specs;
    std::string n_main = "2..7", n_comp = "2..5", n_term = "3,5,7", n_lem = "3,5,7",
                n_id = "2,3,5";
    std::string p_dwork = "5,7", p_rv = "5,7", p_cm = "7,13", s_range = "1", coeff_file;
    long A = 2, B = 1;
    bool no_correction = false;

    CLI::App* vmain = app.add_subcommand("verify-main", "main congruence mod Phi_n^3");
    vmain->add_option("--case", case_specs, "case as two fractions, e.g. --case 1/2,1/2");
    vmain->add_option("--n", n_main, "n values (range a..b or list), default 2..7");
    vmain->add_option("--A", A);
    vmain->add_option("--B", B);

    CLI::App* vcomp =
        app.add_subcommand("verify-companion", "companion congruences mod Phi_n^2 and Phi_n^3");
    vcomp->add_option("--case", case_specs, "case as two fractions");
    vcomp->add_option("--n", n_comp, "n values, default 2..5");
    vcomp->add_option("--A", A);
    vcomp->add_option("--B", B);
    vcomp->add_flag("--no-correction", no_correction,
                    "drop the C(A,B) correction from the Phi_n^3 check (falsifier; probe row)");

    CLI::App* vterm = app.add_subcommand("verify-termwise", "termwise congruence mod Phi_n^3");
    vterm->add_option("--case", case_specs, "case as two fractions");
    vterm->add_option("--n", n_term, "n values, default 3,5,7");
    vterm->add_option("--l", l_specs, "values of l (integers or half-integers), default 1");

    CLI::App* vlem = app.add_subcommand("verify-lemmas", "the (1/2,1/2) lemma chain");
    vlem->add_option("--n", n_lem, "odd n values, default 3,5,7");
    vlem->add_option("--lemma", lemma_specs,
                     "lemma ids (n2 minus_half Q eval spec more half_square ver), default all");
    vlem->add_option("--l", l_specs, "l values for n2/Q/ver (defaults per lemma)");

    CLI::App* vid =
        app.add_subcommand("verify-identities", "root-of-unity identities and Taylor data");
    vid->add_option("--case", case_specs, "cases for the (r1,r2) identity, default a 4-case grid");
    vid->add_option("--n", n_id, "n values, default 2,3,5");
    vid->add_option("--r", r_specs, "parameters r for the one-parameter identity, default 1/2,1/3");

    CLI::App* vdwork = app.add_subcommand("dwork", "Dwork quotient congruences mod p^3");
    vdwork->add_option("--case", case_specs, "case as two fractions");
    vdwork->add_option("--p", p_dwork, "primes, default 5,7");
    vdwork->add_option("--s", s_range, "depths, default 1");

    CLI::App* vrv = app.add_subcommand("rv", "H(p) vs modular form coefficients mod p^3");
    vrv->add_option("--case", case_specs, "case as two fractions")->required();
    vrv->add_option("--p", p_rv, "primes, default 5,7");
    vrv->add_option("--coeff-file", coeff_file,
                    "a(p) table (\"p,a_p\" lines); defaults to the built-in eta expansion for "
                    "the CM case 1/4,1/3");

    CLI::App* vcm = app.add_subcommand("cm", "CM case congruence mod p^4");
    vcm->add_option("--p", p_cm, "primes, default 7,13");

    CLI::App* vreport =
        app.add_subcommand("report", "run the full default verification suite");
    (void)vreport;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    CheckPlan plan;
    plan.parallelism = jobs;
    plan.format = output == "csv" ? OutputFormat::csv : OutputFormat::json_lines;

    try {
        if (app.got_subcommand(vmain)) {
            for (const auto& c : resolve_cases(case_specs))
                for (long n : parse_range(n_main)) {
                    if (!admissible(c, n)) continue;
                    plan.items.push_back({PlanItem::Kind::main, c, A, B, n});
                }
        } else if (app.got_subcommand(vcomp)) {
            for (const auto& c : resolve_cases(case_specs))
                for (long n : parse_range(n_comp)) {
                    if (!admissible(c, n)) continue;
                    plan.items.push_back({no_correction ? PlanItem::Kind::companion_no_correction
                                                        : PlanItem::Kind::companion,
                                          c, A, B, n});
                }
        } else if (app.got_subcommand(vterm)) {
            if (l_specs.empty()) l_specs = {"1"};
            for (const auto& c : resolve_cases(case_specs))
                for (long n : parse_range(n_term)) {
                    if (!admissible(c, n)) continue;
                    for (const auto& ls : l_specs) {
                        PlanItem it{PlanItem::Kind::termwise, c, A, B, n};
                        it.l = parse_half_integer(ls);
                        plan.items.push_back(it);
                    }
                }
        } else if (app.got_subcommand(vlem)) {
            std::vector<LemmaId> ids;
            if (lemma_specs.empty())
                ids = all_lemma_ids();
            else
                for (const auto& s : lemma_specs) ids.push_back(parse_lemma_id(s));
            const HypCase half = make_case(make_rational(1, 2), make_rational(1, 2));
            for (long n : parse_range(n_lem)) {
                if (n < 3 || n % 2 == 0) continue;
                for (LemmaId id : ids) {
                    std::vector<HalfInteger> ls;
                    if (!lemma_needs_l(id))
                        ls = {HalfInteger::of(0)};
                    else if (!l_specs.empty())
                        for (const auto& s : l_specs) ls.push_back(parse_half_integer(s));
                    else if (id == LemmaId::n2)
                        ls = {HalfInteger::of(0), HalfInteger::of(1), HalfInteger::of(2)};
                    else if (id == LemmaId::Q)
                        ls = {HalfInteger::of(1), HalfInteger::of(2)};
                    else
                        ls = {HalfInteger::halves(1), HalfInteger::of(1)};
                    for (const auto& l : ls) {
                        PlanItem it{PlanItem::Kind::lemma, half, A, B, n};
                        it.lemma = id;
                        if (lemma_needs_l(id)) it.l = l;
                        plan.items.push_back(it);
                    }
                }
            }
        } else if (app.got_subcommand(vid)) {
            std::vector<HypCase> cases;
            if (case_specs.empty()) {
                cases = {make_case(make_rational(1, 2), make_rational(1, 2)),
                         make_case(make_rational(1, 3), make_rational(1, 3)),
                         make_case(make_rational(1, 4), make_rational(1, 3)),
                         make_case(make_rational(1, 3), make_rational(1, 5))};
            } else {
                cases = resolve_cases(case_specs);
            }
            for (const auto& c : cases)
                for (long n : parse_range(n_id)) {
                    if (n != 1 && std::gcd(n, c.d) != 1) continue;
                    plan.items.push_back({PlanItem::Kind::beau, c, A, B, n});
                }
            if (r_specs.empty()) r_specs = {"1/2", "1/3"};
            for (const auto& rs : r_specs) {
                BigRational r = parse_fraction(rs);
                HypCase rc = make_case(r, r);
                for (long n : {3L, 5L}) {
                    if (std::gcd(n, 2 * rc.d) != 1) continue;
                    plan.items.push_back({PlanItem::Kind::beau2, rc, A, B, n});
                }
            }
            for (long n = 1; n <= 11; n += 2)
                plan.items.push_back({PlanItem::Kind::taylor, std::nullopt, A, B, n});
        } else if (app.got_subcommand(vdwork)) {
            for (const auto& c : resolve_cases(case_specs))
                for (long p : parse_range(p_dwork)) {
                    if (std::gcd(p, c.d) != 1) continue;
                    if (!dwork_hypothesis_holds(c, p)) {
                        std::cerr << "# skipping " << c.str() << " at p=" << p
                                  << ": H(p) == 0 (mod p), hypothesis fails\n";
                        continue;
                    }
                    for (long s : parse_range(s_range)) {
                        PlanItem it{PlanItem::Kind::dwork, c, A, B, 0};
                        it.p = p;
                        it.s = s;
                        plan.items.push_back(it);
                    }
                }
        } else if (app.got_subcommand(vrv)) {
            HypCase c = parse_case(case_specs.at(0));
            std::string file = coeff_file;
            if (file.empty()) {
                if (c.r1 == make_rational(1, 4) && c.r2 == make_rational(1, 3))
                    file = ":eta:";
                else
                    throw std::runtime_error("--coeff-file is required for this case");
            }
            for (long p : parse_range(p_rv)) {
                if (std::gcd(p, c.d) != 1) continue;
                PlanItem it{PlanItem::Kind::rv, c, A, B, 0};
                it.p = p;
                it.coeff_file = file;
                plan.items.push_back(it);
            }
        } else if (app.got_subcommand(vcm)) {
            for (long p : parse_range(p_cm)) {
                PlanItem it{p % 3 == 1 ? PlanItem::Kind::cm : PlanItem::Kind::cm_ap_zero,
                            std::nullopt, A, B, 0};
                it.p = p;
                plan.items.push_back(it);
            }
        } else {
            add_default_report_items(plan.items);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<CheckResult> results;
    try {
        results = run_plan(plan);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file_out;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
    }
    emit_report(results, plan.format, out_path.empty() ? std::cout : file_out);
    return all_required_pass(results) ? 0 : 1;
}
