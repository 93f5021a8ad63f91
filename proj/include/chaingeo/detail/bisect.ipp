#pragma once

#include <cmath>
#include <string>

#include "chaingeo/errors.hpp"

namespace chaingeo::oracle {

template <class F>
OracleResult bisect(F&& f, double lo, double hi, double tol)
{
    if (!(lo < hi) || !(tol > 0.0))
        throw ParameterError("bisection needs lo < hi and tol > 0");
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0)
        return {lo, 0, 0.0};
    if (fhi == 0.0)
        return {hi, 0, 0.0};
    if ((flo < 0.0) == (fhi < 0.0))
        throw ParameterError("bisection bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                             "] has no sign change");

    OracleResult out;
    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi)
            break; // bracket is down to adjacent doubles
        ++out.iterations;
        const double fmid = f(mid);
        if (fmid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    out.value = lo + 0.5 * (hi - lo);
    out.residual = hi - lo;
    return out;
}

} // namespace chaingeo::oracle
