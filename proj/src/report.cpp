#include "qsc/report.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

namespace qsc {

namespace {

using nlohmann::ordered_json;

std::vector<CheckResult> run_item(const PlanItem& item,
                                  const std::map<std::string, CoeffTable>& tables) {
    switch (item.kind) {
        case PlanItem::Kind::main:
            return {check_main(*item.kase, item.A, item.B, item.n)};
        case PlanItem::Kind::companion: {
            auto [d0, d1] = check_companion(*item.kase, item.A, item.B, item.n);
            return {d0, d1};
        }
        case PlanItem::Kind::companion_no_correction: {
            auto [d0, d1] =
                check_companion(*item.kase, item.A, item.B, item.n, /*with_correction=*/false);
            (void)d0;
            return {d1};
        }
        case PlanItem::Kind::termwise:
            return {check_termwise(*item.kase, *item.l, item.n)};
        case PlanItem::Kind::lemma:
            return {verify_lemma(item.lemma, item.n, item.l)};
        case PlanItem::Kind::beau:
            return {check_beau(item.kase->r1, item.kase->r2, item.n)};
        case PlanItem::Kind::beau2:
            return {check_beau2(item.kase->r1, item.n)};
        case PlanItem::Kind::taylor: {
            auto coeffs = ratio_taylor(item.n, std::max<long>(item.taylor_order, 3));
            const BigRational c = make_rational(-(item.n * item.n - 1), 24);
            bool ok = coeffs[0] == 1 && coeffs[1] == 0 && coeffs[2] == c && coeffs[3] == c;
            return {make_result("taylor", std::nullopt,
                                {{"n", item.n}, {"order", item.taylor_order}}, 'n', item.n, 0,
                                Valuation::infinite(),
                                ok ? Valuation::infinite() : Valuation::finite(0))};
        }
        case PlanItem::Kind::dwork: {
            CheckResult r = dwork_check(*item.kase, item.p, item.s);
            std::vector<CheckResult> out = {r};
            if (item.s >= 2) {
                CheckResult obs =
                    make_result("dwork-3s", *item.kase, r.params, 'p', item.p, 3 * item.s,
                                Valuation::finite(3 * item.s), r.achieved, /*probe=*/true);
                out.push_back(obs);
            }
            return out;
        }
        case PlanItem::Kind::rv:
            return {rv_check(*item.kase, item.p, tables.at(item.coeff_file))};
        case PlanItem::Kind::cm:
            return {cm_check(item.p)};
        case PlanItem::Kind::cm_ap_zero: {
            bool ok = cm_ap_vanishes(item.p);
            return {make_result("cm-ap-zero",
                                make_case(make_rational(1, 4), make_rational(1, 3)),
                                {{"p", item.p}}, 'p', item.p, 0, Valuation::infinite(),
                                ok ? Valuation::infinite() : Valuation::finite(0))};
        }
        case PlanItem::Kind::sharpness:
            return {sharpness_probe(*item.kase, item.A, item.B, item.n)};
    }
    throw std::logic_error("unhandled plan item");
}

std::string sort_key(const CheckResult& r) {
    std::string key = r.check_id + "|";
    if (r.kase) key += r.kase->str();
    key += "|";
    for (const auto& [k, v] : r.params) key += k + "=" + std::to_string(v) + ";";
    key += "|" + std::to_string(r.mod_base) + "^" + std::to_string(r.mod_k);
    return key;
}

ordered_json to_json(const CheckResult& r) {
    ordered_json j;
    j["check_id"] = r.check_id;
    j["r1"] = r.kase ? fraction_str(r.kase->r1) : "-";
    j["r2"] = r.kase ? fraction_str(r.kase->r2) : "-";
    j["d"] = r.kase ? r.kase->d : 0;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    ordered_json mod = ordered_json::object();
    mod[r.mod_var == 'n' ? "n" : "p"] = r.mod_base;
    mod["k"] = r.mod_k;
    j["modulus"] = mod;
    if (r.required.inf)
        j["required_valuation"] = "inf";
    else
        j["required_valuation"] = r.required.v;
    if (r.achieved.inf)
        j["achieved_valuation"] = "inf";
    else
        j["achieved_valuation"] = r.achieved.v;
    j["pass"] = r.pass;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string csv_params(const CheckResult& r) {
    std::string out;
    for (const auto& [k, v] : r.params) {
        if (!out.empty()) out += ";";
        out += k + "=" + std::to_string(v);
    }
    return out;
}

}  // namespace

long resolve_parallelism(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QSC_JOBS")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<long>(hw) : 1;
}

std::vector<CheckResult> run_plan(const CheckPlan& plan) {
    // load coefficient tables before dispatching anything; ":eta:" denotes the
    // built-in CM eta expansion, sized to the largest requested prime
    std::map<std::string, CoeffTable> tables;
    long max_eta_p = 0;
    for (const auto& item : plan.items)
        if (item.kind == PlanItem::Kind::rv && item.coeff_file == ":eta:")
            max_eta_p = std::max(max_eta_p, item.p);
    if (max_eta_p > 0) tables.emplace(":eta:", eta_cm_coeffs(max_eta_p));
    for (const auto& item : plan.items)
        if (item.kind == PlanItem::Kind::rv && !tables.count(item.coeff_file))
            tables.emplace(item.coeff_file, parse_coeff_file(item.coeff_file));

    const size_t count = plan.items.size();
    std::vector<std::vector<CheckResult>> buckets(count);
    std::atomic<size_t> next{0};
    const long jobs = std::min<long>(resolve_parallelism(plan.parallelism),
                                     std::max<size_t>(count, 1));

    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) break;
            const auto start = std::chrono::steady_clock::now();
            std::vector<CheckResult> rows;
            try {
                rows = run_item(plan.items[i], tables);
            } catch (const std::exception& e) {
                // a check that refuses its inputs is reported as a failing row
                const PlanItem& it = plan.items[i];
                CheckResult r = make_result("error", it.kase, {}, 'n', std::max(it.n, 1L), 0,
                                            Valuation::infinite(), Valuation::finite(0));
                r.params["n"] = it.n;
                rows = {r};
            }
            const auto stop = std::chrono::steady_clock::now();
            const long long ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
            for (auto& r : rows) r.elapsed_ms = ms;
            buckets[i] = std::move(rows);
        }
    };
    std::vector<std::thread> pool;
    for (long t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::vector<CheckResult> out;
    for (auto& b : buckets)
        for (auto& r : b) out.push_back(std::move(r));
    std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
        return sort_key(a) < sort_key(b);
    });
    return out;
}

void emit_report(const std::vector<CheckResult>& results, OutputFormat format,
                 std::ostream& out) {
    if (format == OutputFormat::json_lines) {
        for (const auto& r : results) out << to_json(r).dump() << "\n";
        return;
    }
    out << "check_id,r1,r2,d,params,modulus,required_valuation,achieved_valuation,pass,"
           "elapsed_ms\n";
    for (const auto& r : results) {
        out << r.check_id << "," << (r.kase ? fraction_str(r.kase->r1) : "-") << ","
            << (r.kase ? fraction_str(r.kase->r2) : "-") << "," << (r.kase ? r.kase->d : 0) << ","
            << csv_params(r) << "," << (r.mod_var == 'n' ? "n=" : "p=") << r.mod_base
            << ";k=" << r.mod_k << "," << r.required.str() << "," << r.achieved.str() << ","
            << (r.pass ? "true" : "false") << "," << r.elapsed_ms << "\n";
    }
}

bool all_required_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.probe && !r.pass) return false;
    return true;
}

}  // namespace qsc
