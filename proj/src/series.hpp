#pragma once

// Shared truncation loop for power-type series.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qnat/context.hpp"

namespace qnat::detail {

/// Sums term(0), term(1), ... until three consecutive terms are negligible
/// and, when `ratioBound(n)` (an upper bound on |t_{m+1}/t_m| for m >= n)
/// is finite, it is below one and the geometric tail bound is negligible.
/// `term` is called with n = 0, 1, 2, ... in order and may keep state.
template <class TermFn, class RatioFn>
SeriesResult sum_series(TermFn&& term, RatioFn&& ratioBound, const QContext& ctx,
                        const char* what) {
  CompensatedSum acc;
  int smallRun = 0;
  for (int n = 0; n < ctx.maxTerms; ++n) {
    const double t = term(n);
    acc.add(t);
    const double partial = acc.value();
    if (!std::isfinite(partial)) {
      SeriesResult r;
      r.value = partial;
      r.termsUsed = n + 1;
      r.tailEstimate = std::numeric_limits<double>::infinity();
      r.status = SeriesStatus::Diverged;
      return r;
    }
    const double scale = std::max(std::abs(partial), 1e-300);
    smallRun = (std::abs(t) <= ctx.stopTol() * scale) ? smallRun + 1 : 0;
    if (smallRun < 3) continue;
    const double r = ratioBound(n);
    double tail = std::abs(t);
    if (std::isfinite(r)) {
      if (r >= 1.0) continue;  // still before the peak
      tail = std::abs(t) * r / (1.0 - r);
    }
    if (tail > ctx.stopTol() * scale) continue;
    SeriesResult res;
    res.value = partial;
    res.termsUsed = n + 1;
    res.tailEstimate = tail;
    res.status = classify_tail(partial, tail, ctx);
    return res;
  }
  throw NonConvergence(std::string(what) + ": term budget of " + std::to_string(ctx.maxTerms) +
                       " exhausted");
}

inline double no_ratio_bound(int) { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace qnat::detail
