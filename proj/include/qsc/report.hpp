#pragma once

#include <iosfwd>

#include "qsc/checks.hpp"
#include "qsc/identities.hpp"
#include "qsc/padic.hpp"

namespace qsc {

enum class OutputFormat { json_lines, csv };

/// One dispatchable unit of work. A single item may emit several result rows
/// (companion checks emit D0 and D1; a Dwork run at s >= 2 adds the p^{3s}
/// observation row).
struct PlanItem {
    enum class Kind {
        main,
        companion,
        companion_no_correction,
        termwise,
        lemma,
        beau,
        beau2,
        taylor,
        dwork,
        rv,
        cm,
        cm_ap_zero,
        sharpness
    };
    Kind kind = Kind::main;
    std::optional<HypCase> kase;
    long A = 2, B = 1;
    long n = 0;
    long p = 0, s = 1;
    std::optional<HalfInteger> l;
    LemmaId lemma = LemmaId::eval;
    long taylor_order = 3;
    std::string coeff_file;  // rv only

    PlanItem() = default;
    PlanItem(Kind k, std::optional<HypCase> c, long a, long b, long n_)
        : kind(k), kase(std::move(c)), A(a), B(b), n(n_) {}
};

struct CheckPlan {
    std::vector<PlanItem> items;
    int parallelism = 0;  // 0 = QSC_JOBS env or hardware concurrency
    OutputFormat format = OutputFormat::json_lines;
};

/// Executes every item (worker pool of `parallelism` threads) and returns the
/// result rows sorted by a canonical key, so output is independent of
/// scheduling. Coefficient files are loaded up front; unreadable files throw
/// std::runtime_error before any check runs.
std::vector<CheckResult> run_plan(const CheckPlan& plan);

void emit_report(const std::vector<CheckResult>& results, OutputFormat format, std::ostream& out);

/// True when every non-probe row passes (probe rows never gate exit status).
bool all_required_pass(const std::vector<CheckResult>& results);

long resolve_parallelism(int requested);

}  // namespace qsc
