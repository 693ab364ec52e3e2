#pragma once

// q-derivative and Jackson integrals.

#include <functional>

#include "qnat/context.hpp"

namespace qnat {

/// A real function of one nonnegative variable. Must be safe to call
/// concurrently.
using Evaluable = std::function<double(double)>;

/// (f(x) - f(qx)) / ((1-q) x). At x = 0 the lattice limit is taken by
/// Richardson extrapolation of the quotients at x = q^j.
double q_derivative(const Evaluable& f, double x, const QContext& ctx);

/// n-fold q-derivative; n = 0 returns f(x).
double q_derivative_n(const Evaluable& f, double x, int n, const QContext& ctx);

/// int_0^x f d_q t = (1-q) x sum_{k>=0} q^k f(x q^k).
SeriesResult jackson_finite(const Evaluable& f, double x, const QContext& ctx);

/// int_a^b = int_0^b - int_0^a.
SeriesResult jackson_interval(const Evaluable& f, double a, double b, const QContext& ctx);

/// Bilateral integral over (0, inf) on the lattice q^k / scale,
/// (1-q) sum_{k=kMin}^{kMax} (q^k/scale) f(q^k/scale).
///
/// Divergence is reported through the status (never thrown): the outermost
/// terms of the window are inspected and extrapolated geometrically, and a
/// window whose edge terms grow outward is marked Diverged.
SeriesResult jackson_improper(const Evaluable& f, const QContext& ctx, double scale = 1.0);

}  // namespace qnat
