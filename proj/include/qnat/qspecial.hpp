#pragma once

// q-exponentials, q-trigonometric and q-hyperbolic functions, q-gamma and
// q-beta.

#include "qnat/context.hpp"

namespace qnat {

/// E_q(x) = sum q^{n(n-1)/2} x^n / [n]_q!. Entire.
///
/// Summed as a series while |x|(1-q) <= 1; beyond that the equivalent
/// product (-(1-q)x; q)_inf is used, which avoids the cancellation of the
/// alternating series for large negative x.
SeriesResult exp_first(double x, const QContext& ctx);

/// e_q(x) = sum x^n / [n]_q!, |x| < 1/(1-q). DomainError otherwise.
SeriesResult exp_second(double x, const QContext& ctx);

/// e_q(x) extended to every x < 1/(1-q): for negative x outside the series
/// radius it returns 1 / E_q(-x), which is the same function.
double exp_second_extended(double x, const QContext& ctx);

enum class TrigKind { SinSecond, CosSecond, SinFirst, CosFirst };
enum class HyperbolicKind { CoshSecond, SinhSecond };

/// The four q-trigonometric series evaluated at argument a*t.
/// Second-kind members need |a t| < 1/(1-q).
SeriesResult q_trig(TrigKind kind, double a, double t, const QContext& ctx);

/// cosh^q t = (e_q(t) + e_q(-t))/2, sinh^q t = (e_q(t) - e_q(-t))/2.
SeriesResult q_hyperbolic(HyperbolicKind kind, double t, const QContext& ctx);

/// First-kind q-gamma as the finite Jackson integral of x^{t-1} E_q(-qx)
/// over [0, 1/(1-q)]. Requires t > 0.
SeriesResult gamma_first(double t, const QContext& ctx);

/// Second-kind q-gamma as the bilateral Jackson integral of
/// x^{t-1} e_q(-x) over (0, inf). Requires t > 0.
SeriesResult gamma_second(double t, const QContext& ctx);

/// q-beta as the Jackson integral of x^{t-1} (1-qx)_q^{s-1} over [0, 1].
SeriesResult beta_q(double t, double s, const QContext& ctx);

}  // namespace qnat
