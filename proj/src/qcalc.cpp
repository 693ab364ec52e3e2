#include "qnat/qcalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "series.hpp"

namespace qnat {

namespace {

double quotient(const Evaluable& f, double x, double q) {
  return (f(x) - f(q * x)) / ((1.0 - q) * x);
}

// Richardson table over x_j = q^j; the quotient is a power series in x.
double lattice_limit_at_zero(const Evaluable& f, const QContext& ctx) {
  const double q = ctx.q;
  const double tol = std::max(ctx.relTol, 1e-12);
  constexpr int kMaxLevels = 40;
  std::vector<double> prev, cur;
  double last = std::numeric_limits<double>::quiet_NaN();
  double x = 1.0;
  for (int j = 0; j < kMaxLevels && j <= ctx.latticeKMax; ++j) {
    cur.assign(j + 1, 0.0);
    cur[0] = quotient(f, x, q);
    double qm = 1.0;
    for (int m = 1; m <= j; ++m) {
      qm *= q;
      cur[m] = (cur[m - 1] - qm * prev[m - 1]) / (1.0 - qm);
    }
    const double est = cur[j];
    if (j > 0 && std::abs(est - last) <= tol * std::max(std::abs(est), 1.0)) return est;
    last = est;
    prev.swap(cur);
    x *= q;
  }
  throw NonConvergence("q_derivative: lattice limit at x = 0 did not stabilize");
}

}  // namespace

double q_derivative(const Evaluable& f, double x, const QContext& ctx) {
  if (x < 0.0) throw DomainError("q_derivative: x must be nonnegative");
  if (x == 0.0) return lattice_limit_at_zero(f, ctx);
  return quotient(f, x, ctx.q);
}

double q_derivative_n(const Evaluable& f, double x, int n, const QContext& ctx) {
  if (n < 0) throw DomainError("q_derivative_n: n must be nonnegative");
  if (n == 0) return f(x);
  if (n == 1) return q_derivative(f, x, ctx);
  const Evaluable inner = [&f, n, &ctx](double y) { return q_derivative_n(f, y, n - 1, ctx); };
  return q_derivative(inner, x, ctx);
}

SeriesResult jackson_finite(const Evaluable& f, double x, const QContext& ctx) {
  if (!(x > 0.0)) throw DomainError("jackson_finite: upper limit must be positive");
  const double q = ctx.q;
  double qk = 1.0;
  double prevAbs = 0.0;
  double ratio = std::numeric_limits<double>::quiet_NaN();
  auto term = [&](int) {
    const double t = (1.0 - q) * x * qk * f(x * qk);
    qk *= q;
    const double a = std::abs(t);
    ratio = prevAbs > 0.0 ? a / prevAbs : std::numeric_limits<double>::quiet_NaN();
    prevAbs = a;
    return t;
  };
  auto bound = [&](int) { return ratio; };
  return detail::sum_series(term, bound, ctx, "jackson_finite");
}

SeriesResult jackson_interval(const Evaluable& f, double a, double b, const QContext& ctx) {
  if (a < 0.0 || b < 0.0) throw DomainError("jackson_interval: limits must be nonnegative");
  auto part = [&](double x) {
    return x == 0.0 ? SeriesResult{} : jackson_finite(f, x, ctx);
  };
  const SeriesResult hi = part(b);
  const SeriesResult lo = part(a);
  SeriesResult r;
  r.value = hi.value - lo.value;
  r.termsUsed = std::max(hi.termsUsed, lo.termsUsed);
  r.tailEstimate = hi.tailEstimate + lo.tailEstimate;
  r.status = std::max(hi.status, lo.status);
  return r;
}

namespace {

// Tail beyond one edge of the window, extrapolated from the edge block.
// `outer` is the outermost term, `inner` the one `span` steps inward.
// Returns +inf when the terms grow toward the edge.
double edge_tail(double outer, double inner, int span, double negligible) {
  const double o = std::abs(outer);
  const double i = std::abs(inner);
  if (!std::isfinite(o) || !std::isfinite(i)) return std::numeric_limits<double>::infinity();
  if (o == 0.0) return 0.0;
  if (o <= negligible && i <= negligible) return o;
  if (i == 0.0 || o >= i) return std::numeric_limits<double>::infinity();
  const double r = std::pow(o / i, 1.0 / span);
  return o * r / (1.0 - r);
}

}  // namespace

SeriesResult jackson_improper(const Evaluable& f, const QContext& ctx, double scale) {
  if (!(scale > 0.0)) throw DomainError("jackson_improper: lattice scale must be positive");
  const int kMin = ctx.latticeKMin;
  const int kMax = ctx.latticeKMax;
  const int count = kMax - kMin + 1;
  if (count > ctx.maxTerms)
    throw NonConvergence("jackson_improper: lattice window of " + std::to_string(count) +
                         " points exceeds the term budget");
  const double q = ctx.q;
  std::vector<double> terms(count);
  CompensatedSum acc;
  bool finite = true;
  for (int i = 0; i < count; ++i) {
    const int k = kMin + i;
    const double x = std::pow(q, k) / scale;
    const double t = (1.0 - q) * x * f(x);
    terms[i] = t;
    if (!std::isfinite(t)) finite = false;
    acc.add(t);
  }

  SeriesResult res;
  res.value = acc.value();
  res.termsUsed = count;
  res.firstIndex = kMin;
  res.lastIndex = kMax;
  if (!finite || !std::isfinite(res.value)) {
    res.status = SeriesStatus::Diverged;
    res.tailEstimate = std::numeric_limits<double>::infinity();
    return res;
  }

  const double negligible = ctx.stopTol() * std::max(std::abs(res.value), 1e-300);
  const int span = std::max(1, std::min(8, count / 4));
  // Non-negligible edge blocks must shrink monotonically toward the edge.
  auto monotone_outward = [&](int from, int step) {
    for (int j = 0; j < span; ++j) {
      const double inner = std::abs(terms[from + j * step]);
      const double outer = std::abs(terms[from + (j + 1) * step]);
      if (outer > negligible && outer > inner) return false;
    }
    return true;
  };
  if (!monotone_outward(span, -1) || !monotone_outward(count - 1 - span, +1)) {
    res.status = SeriesStatus::Diverged;
    res.tailEstimate = std::numeric_limits<double>::infinity();
    return res;
  }
  const double lowTail = edge_tail(terms.front(), terms[span], span, negligible);
  const double highTail = edge_tail(terms.back(), terms[count - 1 - span], span, negligible);
  res.tailEstimate = lowTail + highTail;

  // Expose the retained part of the window: outermost non-negligible terms.
  int first = 0;
  while (first < count - 1 && std::abs(terms[first]) <= negligible) ++first;
  int last = count - 1;
  while (last > first && std::abs(terms[last]) <= negligible) --last;
  res.firstIndex = kMin + first;
  res.lastIndex = kMin + last;

  if (!std::isfinite(res.tailEstimate)) {
    res.status = SeriesStatus::Diverged;
    return res;
  }
  res.status = classify_tail(res.value, res.tailEstimate, ctx);
  return res;
}

}  // namespace qnat
