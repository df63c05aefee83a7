#pragma once

// Evaluation of the modular j-function from its q-series, with certified
// truncation tails.  j = E4(q)^3 / (q prod (1-q^n)^24) where
// E4(q) = 1 + 240 sum sigma_3(n) q^n; the (2 pi)^12 factors cancel.

#include "neron/complexnum.hpp"
#include "neron/errors.hpp"
#include "neron/numeric.hpp"

#include <vector>

namespace neron {

namespace detail {
inline Integer sigma3(long n) {
    Integer s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        Integer a = d, b = n / d;
        s += a * a * a;
        if (a != b) s += b * b * b;
    }
    return s;
}
}  // namespace detail

// j(tau) for Im(tau) > 0.  The series are truncated once the certified
// geometric remainder falls below 2^-precision relative to the partial sums;
// PrecisionExhausted is thrown if |q| is too close to 1 for that to happen.
inline CNum j_from_tau(const CNum& tau) {
    if (!(tau.im > 0)) throw DomainError("tau must lie in the upper half plane");
    const CNum q = exp(CNum(0, 1) * two_pi() * tau);
    const Real aq = abs(q);
    if (aq > Real(1) / 2) throw PrecisionExhaustedError("|q| too large for the j q-series");

    const Real target = eps_unit();

    // E4 partial sum; remainder over n > N is bounded by
    // 240 (N+1)^3 |q|^{N+1} / (1 - rho), rho = |q| ((N+2)/(N+1))^3 < 1.
    CNum e4(Real(1), Real(0));
    CNum qn(Real(1), Real(0));
    long n = 0;
    while (true) {
        ++n;
        qn *= q;
        e4 += Real(240) * to_real(detail::sigma3(n)) * qn;
        Real ratio = aq * pow(Real(n + 2) / Real(n + 1), 3);
        if (ratio < 1) {
            Real rem = 240 * pow(Real(n + 1), 3) * pow(aq, n + 1) / (1 - ratio);
            if (rem < target) break;
        }
        if (n > 4000) throw PrecisionExhaustedError("E4 series did not converge");
    }

    // prod (1-q^n)^24 via its logarithm is unnecessary; multiply directly.
    CNum prod(Real(1), Real(0));
    qn = CNum(Real(1), Real(0));
    n = 0;
    while (true) {
        ++n;
        qn *= q;
        CNum f = CNum(Real(1), Real(0)) - qn;
        // (1-q^n)^24
        CNum f2 = f * f;
        CNum f4 = f2 * f2;
        CNum f8 = f4 * f4;
        CNum f16 = f8 * f8;
        prod *= f16 * f8;
        // remaining factors differ from 1 by at most 25 |q|^{n+1}/(1-|q|)
        Real rem = 25 * pow(aq, n + 1) / (1 - aq);
        if (rem < target) break;
        if (n > 4000) throw PrecisionExhaustedError("eta product did not converge");
    }

    CNum num = e4 * e4 * e4;
    CNum den = q * prod;
    return num / den;
}

inline Real log_plus_abs_j(const CNum& tau) {
    Real a = abs(j_from_tau(tau));
    return a > 1 ? log(a) : Real(0);
}

}  // namespace neron
