#pragma once

// Exact symbolic values c * log(p).
//
// Every non-archimedean local height in this library is a rational multiple
// of log p for a single prime p, so we keep them symbolic and only evaluate
// to floating point at aggregation time.  This is what makes the exact
// identity checks possible with zero tolerance.

#include "neron/errors.hpp"
#include "neron/numeric.hpp"

#include <map>

namespace neron {

struct LogValue {
    Rational coeff = 0;   // rational coefficient
    Integer prime = 0;    // base prime; 0 denotes the exact zero value

    LogValue() = default;
    LogValue(Rational c, Integer p) : coeff(std::move(c)), prime(std::move(p)) {
        if (coeff == 0) prime = 0;
    }

    static LogValue zero() { return LogValue(); }

    bool is_zero() const { return coeff == 0; }

    Real to_real() const {
        if (is_zero()) return Real(0);
        return to_real_coeff() * log(neron::to_real(prime));
    }
    Real to_real_coeff() const { return neron::to_real(coeff); }

    LogValue& operator+=(const LogValue& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { *this = o; return *this; }
        if (prime != o.prime)
            throw DomainError("cannot add LogValues with different base primes");
        coeff += o.coeff;
        if (coeff == 0) prime = 0;
        return *this;
    }
    LogValue& operator-=(const LogValue& o) { return *this += LogValue(-o.coeff, o.prime); }

    friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
    friend LogValue operator-(LogValue a, const LogValue& b) { return a -= b; }
    friend LogValue operator*(const Rational& s, const LogValue& v) {
        return LogValue(s * v.coeff, v.prime);
    }
    friend bool operator==(const LogValue& a, const LogValue& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.prime == b.prime && a.coeff == b.coeff;
    }
};

// A finite formal sum of rational multiples of log p over several primes;
// used when aggregating over places.
struct LogCombination {
    std::map<Integer, Rational> terms;

    void add(const LogValue& v) {
        if (v.is_zero()) return;
        Rational& c = terms[v.prime];
        c += v.coeff;
        if (c == 0) terms.erase(v.prime);
    }
    Real to_real() const {
        Real s = 0;
        for (const auto& [p, c] : terms) s += neron::to_real(c) * log(neron::to_real(p));
        return s;
    }
    bool operator==(const LogCombination& o) const { return terms == o.terms; }
};

}  // namespace neron
