#include "qnat/qspecial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qnat/qcalc.hpp"
#include "qnat/qcore.hpp"
#include "series.hpp"

namespace qnat {

namespace {

SeriesResult combine(const SeriesResult& a, const SeriesResult& b, double value) {
  SeriesResult r;
  r.value = value;
  r.termsUsed = std::max(a.termsUsed, b.termsUsed);
  r.tailEstimate = a.tailEstimate + b.tailEstimate;
  r.status = std::max(a.status, b.status);
  return r;
}

void require_second_radius(double x, const QContext& ctx, const char* what) {
  if (!(std::abs(x) < 1.0 / (1.0 - ctx.q)))
    throw DomainError(std::string(what) + ": |x| must be below 1/(1-q)");
}

}  // namespace

SeriesResult exp_first(double x, const QContext& ctx) {
  const double q = ctx.q;
  if (!std::isfinite(x)) throw DomainError("exp_first: x must be finite");
  if (std::abs(x) * (1.0 - q) >= 1.0) return q_pochhammer_inf(-(1.0 - q) * x, ctx);

  double t = 1.0;
  double qn = 1.0;  // q^{n-1} for the step into term n
  auto term = [&](int n) {
    if (n > 0) {
      t *= qn * x / q_bracket(n, ctx);
      qn *= q;
    }
    return t;
  };
  auto bound = [&](int n) { return std::pow(q, n) * std::abs(x) / q_bracket(n + 1, ctx); };
  return detail::sum_series(term, bound, ctx, "exp_first");
}

SeriesResult exp_second(double x, const QContext& ctx) {
  require_second_radius(x, ctx, "exp_second");
  if (x < 0.0) {
    // The alternating series cancels near the radius; e_q(x) E_q(-x) = 1
    // has only positive terms.
    SeriesResult r = exp_first(-x, ctx);
    r.tailEstimate /= r.value * r.value;
    r.value = 1.0 / r.value;
    return r;
  }
  double t = 1.0;
  auto term = [&](int n) {
    if (n > 0) t *= x / q_bracket(n, ctx);
    return t;
  };
  auto bound = [&](int n) { return std::abs(x) / q_bracket(n + 1, ctx); };
  return detail::sum_series(term, bound, ctx, "exp_second");
}

double exp_second_extended(double x, const QContext& ctx) {
  if (x < 0.0 && -x * (1.0 - ctx.q) > 0.5) return 1.0 / exp_first(-x, ctx).value;
  return exp_second(x, ctx).value;
}

SeriesResult q_trig(TrigKind kind, double a, double t, const QContext& ctx) {
  const double q = ctx.q;
  const double x = a * t;
  const bool second = kind == TrigKind::SinSecond || kind == TrigKind::CosSecond;
  const bool sine = kind == TrigKind::SinSecond || kind == TrigKind::SinFirst;
  if (second) require_second_radius(x, ctx, "q_trig");
  if (!std::isfinite(x)) throw DomainError("q_trig: argument must be finite");

  const double x2 = x * x;
  // Index of the bracket pair consumed by step n: sine uses [2n][2n+1],
  // cosine [2n-1][2n]. First-kind sine gains q^n per step, cosine q^{n-1}.
  double term = sine ? x : 1.0;
  auto next = [&](int n) {
    if (n > 0) {
      const double lo = sine ? 2.0 * n : 2.0 * n - 1.0;
      double factor = -x2 / (q_bracket(lo, ctx) * q_bracket(lo + 1.0, ctx));
      if (!second) factor *= std::pow(q, sine ? n : n - 1);
      term *= factor;
    }
    return term;
  };
  auto bound = [&](int n) {
    const double lo = sine ? 2.0 * (n + 1) : 2.0 * (n + 1) - 1.0;
    double r = x2 / (q_bracket(lo, ctx) * q_bracket(lo + 1.0, ctx));
    if (!second) r *= std::pow(q, sine ? n + 1 : n);
    return r;
  };
  return detail::sum_series(next, bound, ctx, "q_trig");
}

SeriesResult q_hyperbolic(HyperbolicKind kind, double t, const QContext& ctx) {
  const SeriesResult plus = exp_second(t, ctx);
  const SeriesResult minus = exp_second(-t, ctx);
  const double v = kind == HyperbolicKind::CoshSecond ? 0.5 * (plus.value + minus.value)
                                                      : 0.5 * (plus.value - minus.value);
  return combine(plus, minus, v);
}

SeriesResult gamma_first(double t, const QContext& ctx) {
  if (!(t > 0.0)) throw DomainError("gamma_first: t must be positive");
  const double q = ctx.q;
  const double logq = std::log(q);
  const double logScale = -std::log1p(-q);  // log 1/(1-q)

  // Kernel E_q(-q x_k) at x_k = q^k/(1-q) equals (q^{k+1}; q)_inf; carried
  // in log form so that it survives q close to one.
  // Compensated: ~1/(1-q) logs of size ~1/(1-q) are accumulated.
  CompensatedSum logKernel;
  {
    int j = 1;
    for (double qj = q; j <= ctx.maxTerms && qj > 1e-18; ++j, qj = std::pow(q, j))
      logKernel.add(std::log1p(-qj));
    if (j > ctx.maxTerms) throw NonConvergence("gamma_first: kernel product exhausted maxTerms");
  }
  auto term = [&](int k) {
    if (k > 0) logKernel.add(-std::log1p(-std::pow(q, k)));
    // q^k * x_k^{t-1} * kernel
    return std::exp(k * logq + (t - 1.0) * (k * logq + logScale) + logKernel.value());
  };
  auto bound = [&](int k) { return std::pow(q, t) / (1.0 - std::pow(q, k + 1)); };
  return detail::sum_series(term, bound, ctx, "gamma_first");
}

SeriesResult gamma_second(double t, const QContext& ctx) {
  if (!(t > 0.0)) throw DomainError("gamma_second: t must be positive");
  const Evaluable integrand = [t, &ctx](double x) {
    const double kernel = exp_second_extended(-x, ctx);
    return kernel == 0.0 ? 0.0 : std::pow(x, t - 1.0) * kernel;
  };
  return jackson_improper(integrand, ctx);
}

SeriesResult beta_q(double t, double s, const QContext& ctx) {
  if (!(t > 0.0) || !(s > 0.0)) throw DomainError("beta_q: t and s must be positive");
  const Evaluable integrand = [t, s, &ctx](double x) {
    return std::pow(x, t - 1.0) * q_pochhammer_real(ctx.q * x, s - 1.0, ctx);
  };
  return jackson_finite(integrand, 1.0, ctx);
}

}  // namespace qnat
