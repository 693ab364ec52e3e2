#include "qnat/qcore.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qnat {

double q_bracket(double x, const QContext& ctx) {
  // expm1 keeps [x]_q accurate for small x and for q close to one.
  return -std::expm1(x * std::log(ctx.q)) / (1.0 - ctx.q);
}

double q_bracket(QInfinity, const QContext& ctx) { return 1.0 / (1.0 - ctx.q); }

double q_factorial(int n, const QContext& ctx) {
  if (n < 0) throw DomainError("q_factorial: n must be nonnegative");
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= q_bracket(i, ctx);
  return r;
}

double q_pochhammer(double x, int n, const QContext& ctx) {
  if (n < 0) throw DomainError("q_pochhammer: n must be nonnegative");
  double r = 1.0;
  double qk = 1.0;
  for (int k = 0; k < n; ++k) {
    r *= 1.0 - x * qk;
    qk *= ctx.q;
  }
  return r;
}

SeriesResult q_pochhammer_inf(double x, const QContext& ctx) {
  if (!std::isfinite(x)) throw DomainError("q_pochhammer_inf: x must be finite");
  SeriesResult res;
  if (x >= 1.0) {
    // x = q^{-m}: the factor at k = m vanishes, but the partial products
    // before it may already overflow.
    const double m = std::round(std::log(x) / -std::log(ctx.q));
    if (std::abs(x * std::pow(ctx.q, m) - 1.0) <= 1e-13) {
      res.termsUsed = static_cast<int>(m) + 1;
      return res;
    }
  }
  double prod = 1.0;
  double xqk = x;
  const double eps = ctx.stopTol();
  for (int k = 0; k < ctx.maxTerms; ++k) {
    // x = q^{-k} up to rounding in the repeated products: an exact zero.
    const double factor = std::abs(1.0 - xqk) <= 1e-13 ? 0.0 : 1.0 - xqk;
    prod *= factor;
    res.termsUsed = k + 1;
    if (prod == 0.0 || !std::isfinite(prod)) {
      // Exact zero factor, or the product left the representable range.
      res.value = prod;
      res.tailEstimate = 0.0;
      res.status = std::isfinite(prod) ? SeriesStatus::Converged : SeriesStatus::Diverged;
      return res;
    }
    xqk *= ctx.q;
    // log|rest| ~ sum_j |x q^j| = |x q^{k+1}| / (1 - q).
    const double restLog = std::abs(xqk) / (1.0 - ctx.q);
    if (restLog <= eps) {
      res.value = prod;
      res.tailEstimate = std::abs(prod) * restLog;
      res.status = classify_tail(prod, res.tailEstimate, ctx);
      return res;
    }
  }
  throw NonConvergence("q_pochhammer_inf: term budget of " + std::to_string(ctx.maxTerms) +
                       " exhausted");
}

double q_pochhammer_real(double x, double t, const QContext& ctx) {
  const double num = q_pochhammer_inf(x, ctx).value;
  const double den = q_pochhammer_inf(x * std::pow(ctx.q, t), ctx).value;
  if (den == 0.0) {
    if (num == 0.0) {
      // Both vanish: x = q^{-j}. Fall back to the finite form when t is a
      // nonnegative integer; otherwise the ratio is undefined.
      if (t >= 0 && std::floor(t) == t) return q_pochhammer(x, static_cast<int>(t), ctx);
    }
    throw DomainError("q_pochhammer_real: (x q^t; q)_inf vanishes");
  }
  return num / den;
}

}  // namespace qnat
