#include <cmath>
#include <string>

#include "qnat/qcalc.hpp"
#include "qnat/qcore.hpp"
#include "qnat/qspecial.hpp"
#include "qnat/transforms.hpp"

namespace qnat {

const char* to_string(ClosedVariant v) { return v == ClosedVariant::Printed ? "printed" : "derived"; }

const char* to_string(SecondOrdering o) {
  switch (o) {
    case SecondOrdering::A: return "A";
    case SecondOrdering::B: return "B";
    case SecondOrdering::C: return "C";
  }
  return "?";
}

namespace {

constexpr double kGuard = 1e-6;

bool is_nonneg_integer(double x) { return x >= 0.0 && x <= 170.0 && std::floor(x) == x; }

void guard_ratio(double x, double limit, const char* what) {
  if (!(std::abs(x) <= limit * (1.0 - kGuard)))
    throw DomainError(std::string(what) + ": closed form requires |a u / v| < " +
                      std::to_string(limit) + " (with margin)");
}

double closed_first(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                    ClosedVariant variant) {
  const double u = pt.u, v = pt.v, a = f.param;
  const double x = a * u / v;
  const bool printed = variant == ClosedVariant::Printed;
  switch (f.kind) {
    case SpecKind::Constant: return a / v;
    case SpecKind::Monomial: {
      if (!(a > -1.0)) throw DomainError("monomial exponent must exceed -1");
      const double g = is_nonneg_integer(a) ? q_factorial(static_cast<int>(a), ctx)
                                            : gamma_first(a + 1.0, ctx).value;
      return std::pow(u, a) / std::pow(v, a + 1.0) * g;
    }
    case SpecKind::PowerSeries: {
      double s = 0.0;
      for (std::size_t i = 0; i < f.coefficients.size(); ++i)
        s += f.coefficients[i] *
             closed_first(FunctionSpec::monomial(a * static_cast<double>(i)), pt, ctx, variant);
      return s;
    }
    case SpecKind::ExpSecond:
      guard_ratio(x, 1.0, "e_q");
      return 1.0 / (v - a * u);
    case SpecKind::ExpFirst: {
      // (1/v) sum q^{n(n-1)/2} x^n
      double s = 0.0, term = 1.0;
      int small = 0;
      for (int n = 0;; ++n) {
        if (n >= ctx.maxTerms) throw NonConvergence("E_q closed series: term budget exhausted");
        if (n > 0) term *= std::pow(ctx.q, n - 1) * x;
        s += term;
        small = std::abs(term) <= ctx.stopTol() * std::max(std::abs(s), 1e-300) ? small + 1 : 0;
        if (small >= 3 || term == 0.0) break;
      }
      return s / v;
    }
    case SpecKind::CosSecond:
      guard_ratio(x, 1.0, "cos^q");
      return v / (v * v + (printed ? -1.0 : 1.0) * a * a * u * u);
    case SpecKind::SinSecond:
      guard_ratio(x, 1.0, "sin^q");
      return a * u / (v * v + (printed ? -1.0 : 1.0) * a * a * u * u);
    case SpecKind::CoshSecond:
      guard_ratio(x, 1.0, "cosh^q");
      return v / (v * v + (printed ? 1.0 : -1.0) * a * a * u * u);
    case SpecKind::SinhSecond:
      guard_ratio(x, 1.0, "sinh^q");
      return a * u / (v * v + (printed ? 1.0 : -1.0) * a * a * u * u);
    case SpecKind::Heaviside: return exp_first(-(v / u) * a, ctx).value / v;
    case SpecKind::Sum: {
      double s = 0.0;
      for (const auto& c : f.children) s += closed_first(c, pt, ctx, variant);
      return s;
    }
    case SpecKind::Scale: return a * closed_first(f.children.front(), pt, ctx, variant);
    default: throw UnknownForm("no first-kind closed form for this function");
  }
}

double closed_second(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                     ClosedVariant variant) {
  const double u = pt.u, v = pt.v, a = f.param, q = ctx.q;
  const bool printed = variant == ClosedVariant::Printed;
  switch (f.kind) {
    case SpecKind::Constant: return a / v;
    case SpecKind::Monomial: {
      if (!(a > -1.0)) throw DomainError("monomial exponent must exceed -1");
      double g;
      if (is_nonneg_integer(a)) {
        const double e = printed ? a * (a - 1.0) / 2.0 : a * (a + 1.0) / 2.0;
        g = std::pow(q, -e) * q_factorial(static_cast<int>(a), ctx);
      } else {
        g = gamma_second(a + 1.0, ctx).value;
      }
      return std::pow(u, a) / std::pow(v, a + 1.0) * g;
    }
    case SpecKind::PowerSeries: {
      double s = 0.0;
      for (std::size_t i = 0; i < f.coefficients.size(); ++i)
        s += f.coefficients[i] *
             closed_second(FunctionSpec::monomial(a * static_cast<double>(i)), pt, ctx, variant);
      return s;
    }
    case SpecKind::ExpFirst:
      guard_ratio(a * u / v, q, "E_q");
      return printed ? 1.0 / (u * (v - a * u)) : q / (q * v - a * u);
    case SpecKind::ExpSecond:
    case SpecKind::CosSecond:
    case SpecKind::SinSecond:
      throw DomainError("second-kind transform of this function exists only as a formal series");
    case SpecKind::Sum: {
      double s = 0.0;
      for (const auto& c : f.children) s += closed_second(c, pt, ctx, variant);
      return s;
    }
    case SpecKind::Scale: return a * closed_second(f.children.front(), pt, ctx, variant);
    default: throw UnknownForm("no second-kind closed form for this function");
  }
}

}  // namespace

double nq_first_closed(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                       ClosedVariant variant) {
  ctx.validate();
  pt.validate();
  return closed_first(normalize(f, ctx), pt, ctx, variant);
}

double nq_second_closed(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                        ClosedVariant variant) {
  ctx.validate();
  pt.validate();
  return closed_second(normalize(f, ctx), pt, ctx, variant);
}

double nq_closed(TransformKind kind, const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                 ClosedVariant variant) {
  return kind == TransformKind::First ? nq_first_closed(f, pt, ctx, variant)
                                      : nq_second_closed(f, pt, ctx, variant);
}

bool has_closed_variants(TransformKind kind, const FunctionSpec& f) {
  for (const auto& c : f.children)
    if (has_closed_variants(kind, c)) return true;
  if (kind == TransformKind::First) {
    switch (f.kind) {
      case SpecKind::CosSecond:
      case SpecKind::SinSecond:
      case SpecKind::CoshSecond:
      case SpecKind::SinhSecond: return true;
      default: return false;
    }
  }
  switch (f.kind) {
    case SpecKind::Monomial: return is_nonneg_integer(f.param) && f.param >= 1.0;
    case SpecKind::PowerSeries: return f.coefficients.size() > 1;
    case SpecKind::ExpFirst:
    case SpecKind::ExpSecond:
    case SpecKind::CosSecond:
    case SpecKind::SinSecond: return true;
    default: return false;
  }
}

std::vector<double> nq_second_formal(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                                     int order, ClosedVariant variant) {
  ctx.validate();
  pt.validate();
  if (order < 1) throw DomainError("formal order must be at least 1");
  FunctionSpec g = normalize(f, ctx);
  double c = 1.0;
  if (g.kind == SpecKind::Scale) {
    c = g.param;
    g = g.children.front();
  }
  if (g.kind != SpecKind::ExpSecond && g.kind != SpecKind::CosSecond &&
      g.kind != SpecKind::SinSecond)
    throw UnknownForm("formal series defined for e_q, cos^q and sin^q only");
  const double a = g.param;
  if (a == 0.0) throw DomainError("formal series in a u / v needs a nonzero frequency");
  const double u = pt.u, v = pt.v, q = ctx.q;
  std::vector<double> coef(order, 0.0);

  if (variant == ClosedVariant::Printed) {
    for (int j = 0; j < order; ++j) {
      if (g.kind == SpecKind::ExpSecond) {
        coef[j] = std::pow(q, -j * (j - 1.0) / 2.0) / (u * v);
      } else if (g.kind == SpecKind::CosSecond && j % 2 == 0) {
        const int n = j / 2;
        coef[j] = (n % 2 ? -1.0 : 1.0) * std::pow(q, -n * (2.0 * n - 1.0)) / u;
      } else if (g.kind == SpecKind::SinSecond && j % 2 == 1) {
        const int n = (j - 1) / 2;
        coef[j] = (n % 2 ? -1.0 : 1.0) * std::pow(q, -n * (2.0 * n - 1.0)) / (u * v);
      }
      coef[j] *= c;
    }
    return coef;
  }

  // Term by term: coefficient of t^j is d_j a^j; the monomial rule gives
  // d_j a^j u^j gamma(j+1) / v^{j+1} = d_j gamma(j+1) / v * x^j.
  const PowerExpansion e = expand(g, ctx).front();
  PowerExpansion::Cursor cur(e);
  for (;;) {
    const PowerTerm t = cur.next();
    const int j = static_cast<int>(t.exponent);
    if (j >= order) break;
    coef[j] = c * t.coefficient / std::pow(a, j) * gamma_second(j + 1.0, ctx).value / v;
  }
  return coef;
}

SeriesResult q_convolution(const FunctionSpec& f, const FunctionSpec& g, double t,
                           const QContext& ctx) {
  ctx.validate();
  FunctionSpec gn = normalize(g, ctx);
  double gScale = 1.0;
  if (gn.kind == SpecKind::Scale) {
    gScale = gn.param;
    gn = gn.children.front();
  }
  if (gn.kind == SpecKind::Constant) {
    gScale *= gn.param;
    gn = FunctionSpec::monomial(0.0);
  }
  if (gn.kind != SpecKind::Monomial || !(gn.param > -1.0))
    throw DomainError("q_convolution: g must be t^(beta-1) with beta > 0");
  const double bm1 = gn.param;

  const FunctionSpec fn = normalize(f, ctx);
  std::function<bool(const FunctionSpec&)> supported = [&](const FunctionSpec& s) {
    switch (s.kind) {
      case SpecKind::Constant:
      case SpecKind::Monomial:
      case SpecKind::PowerSeries: return true;
      case SpecKind::Scale: return supported(s.children.front());
      case SpecKind::Sum:
        for (const auto& c : s.children)
          if (!supported(c)) return false;
        return true;
      default: return false;
    }
  };
  if (!supported(fn)) throw DomainError("q_convolution: f must be a monomial or power series");
  if (!(t >= 0.0)) throw DomainError("q_convolution: t must be nonnegative");
  if (t == 0.0) return SeriesResult{};

  const double q = ctx.q;
  const double tb = std::pow(t, bm1);
  const Evaluable integrand = [fn, ctx, t, tb, bm1, q](double tau) {
    return evaluate(fn, tau, ctx) * tb * q_pochhammer_real(q * tau / t, bm1, ctx);
  };
  SeriesResult r = jackson_finite(integrand, t, ctx);
  r.value *= gScale;
  r.tailEstimate *= std::abs(gScale);
  return r;
}

std::pair<double, double> derivative_rule_sides(TransformKind kind, const FunctionSpec& f, int n,
                                                TransformPoint pt, const QContext& ctx,
                                                ClosedVariant variant, SecondOrdering ordering) {
  ctx.validate();
  pt.validate();
  if (n < 1) throw DomainError("derivative order must be positive");
  const auto dn = q_derivative_spec(f, n, ctx);
  if (!dn) throw UnknownForm("no symbolic q-derivative for this function");
  std::vector<double> d0(n);
  for (int i = 0; i < n; ++i) d0[i] = evaluate(*q_derivative_spec(f, i, ctx), 0.0, ctx);

  const double u = pt.u, v = pt.v, q = ctx.q, r = v / u;
  const bool printed = variant == ClosedVariant::Printed;

  if (kind == TransformKind::First) {
    const double lhs = nq_first(*dn, pt, ctx, StrategyChoice::termwise()).value;
    double rhs = std::pow(r, n) * nq_first(f, pt, ctx, StrategyChoice::termwise()).value;
    for (int i = 0; i < n; ++i) rhs -= std::pow(r, n - 1 - i) * d0[i] / (printed ? 1.0 : u);
    return {lhs, rhs};
  }

  const StrategyChoice direct = StrategyChoice::direct();
  const double lhs = nq_second(*dn, pt, ctx, direct).value;
  const double qn = std::pow(q, -n);
  double rhs;
  if (printed) {
    TransformPoint at;
    switch (ordering) {
      case SecondOrdering::A: at = {u, qn * v}; break;
      case SecondOrdering::B: at = {qn * u, v}; break;
      case SecondOrdering::C: at = {qn * v, u}; break;
    }
    rhs = std::pow(r, n) * qn * nq_second(f, at, ctx, direct).value;
    for (int i = 0; i < n; ++i) rhs -= std::pow(r, n - 1 - i) * d0[i];
  } else {
    rhs = std::pow(r, n) * std::pow(q, -n * (n + 1) / 2.0) *
          nq_second(f, {u, qn * v}, ctx, direct).value;
    for (int i = 0; i < n; ++i) {
      const int j = n - 1 - i;
      rhs -= std::pow(r, j) * std::pow(q, -j * (j + 1) / 2.0) * d0[i] / u;
    }
  }
  return {lhs, rhs};
}

}  // namespace qnat
