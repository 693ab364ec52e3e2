#pragma once

// Scalar q-arithmetic: brackets, factorials and shifted factorials.

#include "qnat/context.hpp"

namespace qnat {

/// Marker selecting the bracket of infinity, 1/(1-q).
struct QInfinity {};
inline constexpr QInfinity q_infinity{};

/// [x]_q = (1 - q^x) / (1 - q).
double q_bracket(double x, const QContext& ctx);
double q_bracket(QInfinity, const QContext& ctx);

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
double q_factorial(int n, const QContext& ctx);

/// Finite shifted factorial (x; q)_n.
double q_pochhammer(double x, int n, const QContext& ctx);

/// Infinite product (x; q)_inf, truncated once the factors reach one to
/// working precision. Throws NonConvergence when maxTerms runs out first.
SeriesResult q_pochhammer_inf(double x, const QContext& ctx);

/// Real-order shifted factorial (x; q)_t = (x; q)_inf / (x q^t; q)_inf.
/// Reduces to the finite product for integer t >= 0.
double q_pochhammer_real(double x, double t, const QContext& ctx);

}  // namespace qnat
