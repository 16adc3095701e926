#pragma once

#include <string>

namespace qsc {

/// Order of vanishing; the infinite value marks an identically zero argument
/// (or an exact-identity requirement).
struct Valuation {
    bool inf = false;
    long v = 0;

    static Valuation finite(long x) { return Valuation{false, x}; }
    static Valuation infinite() { return Valuation{true, 0}; }

    bool operator==(const Valuation& o) const {
        return inf == o.inf && (inf || v == o.v);
    }

    bool at_least(long k) const { return inf || v >= k; }
    bool at_least(const Valuation& o) const {
        if (o.inf) return inf;
        return at_least(o.v);
    }

    Valuation operator+(const Valuation& o) const {
        if (inf || o.inf) return infinite();
        return finite(v + o.v);
    }
    Valuation operator-(long k) const { return inf ? infinite() : finite(v - k); }

    std::string str() const { return inf ? "inf" : std::to_string(v); }
};

}  // namespace qsc
