#pragma once

#include <map>
#include <optional>
#include <string>

#include "qsc/hyper.hpp"
#include "qsc/valuation.hpp"

namespace qsc {

/// Outcome of one congruence/identity check. `required` is infinite for
/// exact-identity checks; pass always means achieved >= required. Probe
/// results (sharpness, observation rows) never gate an exit status.
struct CheckResult {
    std::string check_id;
    std::optional<HypCase> kase;
    std::map<std::string, long> params;  // half-integer l stored doubled under "l2"
    char mod_var = 'n';                  // 'n': modulus Phi_n^k; 'p': modulus p^k
    long mod_base = 0;
    long mod_k = 0;
    Valuation required;
    Valuation achieved;
    bool pass = false;
    bool probe = false;
    long long elapsed_ms = 0;
};

inline CheckResult make_result(std::string id, std::optional<HypCase> kase,
                               std::map<std::string, long> params, char mod_var, long mod_base,
                               long mod_k, Valuation required, Valuation achieved,
                               bool probe = false) {
    CheckResult r;
    r.check_id = std::move(id);
    r.kase = std::move(kase);
    r.params = std::move(params);
    r.mod_var = mod_var;
    r.mod_base = mod_base;
    r.mod_k = mod_k;
    r.required = required;
    r.achieved = achieved;
    r.pass = achieved.at_least(required);
    r.probe = probe;
    return r;
}

}  // namespace qsc
