#pragma once

#include "chaingeo/config.hpp"

namespace chaingeo::oracle {

// Floating-point solvers that rebuild the chain radii and the square side
// from tangency constraints alone. The solvers must not use the closed forms
// from config.cpp; the point is to check them.

struct OracleResult {
    double value = 0.0;
    int iterations = 0;
    /// Width of the final bracket around the root, at most the requested tol.
    double residual = 0.0;
};

/// Bisects a strictly monotone function with a sign change on [lo, hi]
/// until the bracket is no wider than tol. Never evaluates outside [lo, hi].
template <class F>
OracleResult bisect(F&& f, double lo, double hi, double tol);

/// Chain radius of CB(n) from the closure condition of the chain: the first
/// circle touching the left outer circle sits at x1 = -a + 2 sqrt(ab), the
/// last at xn = a - 2 sqrt(ab), and n congruent circles span xn - x1 = 2b(n-1).
OracleResult chain_radius_cb(unsigned n, double a, double tol);

/// Chain radius of CA(n) from the contact of the outer circle with the end
/// circle of the chain centered at ((n-1)b, b).
OracleResult chain_radius_ca(unsigned n, double a, double tol);

/// Side of the square with upper corners on the outer circles of CB, smaller
/// root of the on-circle condition.
OracleResult square_side(double a, double tol);

/// Maximum violation, relative to a, over the tangency equations and the
/// derived identities of cfg evaluated in double precision.
double numeric_residuals(const ChainConfig& cfg);

} // namespace chaingeo::oracle

#include "chaingeo/detail/bisect.ipp"
