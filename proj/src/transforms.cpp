#include "qnat/transforms.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "qnat/qcalc.hpp"
#include "qnat/qcore.hpp"
#include "qnat/qspecial.hpp"

namespace qnat {

void TransformPoint::validate() const {
  if (!(u > 0.0) || !(v > 0.0) || !std::isfinite(u) || !std::isfinite(v))
    throw DomainError("transform variables u and v must be positive and finite");
}

const char* to_string(TransformKind k) { return k == TransformKind::First ? "first" : "second"; }

const char* to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::DirectLattice: return "DirectLattice";
    case StrategyKind::TermwiseGamma: return "TermwiseGamma";
    case StrategyKind::Formal: return "Formal";
  }
  return "?";
}

StrategyChoice default_strategy(TransformKind k) {
  return k == TransformKind::First ? StrategyChoice::termwise() : StrategyChoice::direct();
}

namespace {

// E_q(-x) = ((1-q) x; q)_inf.
double first_kernel(double x, const QContext& ctx) {
  return q_pochhammer_inf((1.0 - ctx.q) * x, ctx).value;
}

// e_q(-x) = 1 / (-(1-q) x; q)_inf for x >= 0.
double second_kernel(double x, const QContext& ctx) {
  const double p = q_pochhammer_inf(-(1.0 - ctx.q) * x, ctx).value;
  return std::isfinite(p) ? 1.0 / p : 0.0;
}

// f(t) * kernel(t), skipping f where the kernel vanishes or blows up.
Evaluable weighted(Evaluable f, std::function<double(double)> k) {
  return [f, k](double t) {
    const double w = k(t);
    if (w == 0.0) return 0.0;
    if (!std::isfinite(w)) return w;
    return w * f(t);
  };
}

Evaluable weighted(const FunctionSpec& f, const QContext& ctx, std::function<double(double)> k) {
  return weighted([f, ctx](double t) { return evaluate(f, t, ctx); }, std::move(k));
}

SeriesResult scaled(SeriesResult r, double c) {
  r.value *= c;
  r.tailEstimate *= std::abs(c);
  return r;
}

}  // namespace

SeriesResult q_laplace(TransformKind kind, const FunctionSpec& f, double s, const QContext& ctx) {
  ctx.validate();
  if (!(s > 0.0)) throw DomainError("q_laplace: s must be positive");
  const double pre = 1.0 / (1.0 - ctx.q);
  if (kind == TransformKind::First) {
    auto k = [s, ctx](double t) { return first_kernel(ctx.q * s * t, ctx); };
    return scaled(jackson_finite(weighted(f, ctx, k), 1.0 / s, ctx), pre);
  }
  auto k = [s, ctx](double t) { return second_kernel(s * t, ctx); };
  const double scale = ctx.anchor == LatticeAnchor::Adapted ? s : 1.0;
  return scaled(jackson_improper(weighted(f, ctx, k), ctx, scale), pre);
}

SeriesResult q_sumudu(TransformKind kind, const FunctionSpec& f, double s, const QContext& ctx) {
  ctx.validate();
  if (!(s > 0.0)) throw DomainError("q_sumudu: s must be positive");
  if (kind == TransformKind::First) {
    auto k = [s, ctx](double t) { return first_kernel(ctx.q * t / s, ctx); };
    return scaled(jackson_finite(weighted(f, ctx, k), s, ctx), 1.0 / ((1.0 - ctx.q) * s));
  }
  auto k = [s, ctx](double t) { return second_kernel(t / s, ctx); };
  const double scale = ctx.anchor == LatticeAnchor::Adapted ? 1.0 / s : 1.0;
  return scaled(jackson_improper(weighted(f, ctx, k), ctx, scale), 1.0 / (1.0 - ctx.q));
}

namespace {

// Gamma function of the transform kind and the ratio G(x+1)/G(x).
struct GammaRule {
  std::function<double(double)> value;
  std::function<double(double)> step;
};

GammaRule gamma_rule(TransformKind kind, const QContext& ctx) {
  if (kind == TransformKind::First)
    return {[ctx](double x) { return gamma_first(x, ctx).value; },
            [ctx](double x) { return q_bracket(x, ctx); }};
  return {[ctx](double x) { return gamma_second(x, ctx).value; },
          [ctx](double x) { return std::pow(ctx.q, -x) * q_bracket(x, ctx); }};
}

double monomial_transform(double coef, double e, TransformPoint pt, const GammaRule& g) {
  if (!(e > -1.0)) throw DomainError("monomial exponent must exceed -1 for a transform");
  if (coef == 0.0) return 0.0;
  return coef * std::pow(pt.u, e) / std::pow(pt.v, e + 1.0) * g.value(e + 1.0);
}

// Applies the monomial rule to every term of every expansion. formalOrder > 0
// keeps only the first formalOrder terms of each infinite expansion.
SeriesResult termwise(TransformKind kind, const FunctionSpec& f, TransformPoint pt,
                      const QContext& ctx, int formalOrder) {
  const GammaRule g = gamma_rule(kind, ctx);
  CompensatedSum acc;
  SeriesResult res;
  res.mode = formalOrder > 0 ? EvalMode::Formal : EvalMode::Numeric;
  double tail = 0.0;
  for (const PowerExpansion& e : expand(f, ctx)) {
    if (!e.infinite) {
      for (const PowerTerm& t : e.terms) acc.add(monomial_transform(t.coefficient, t.exponent, pt, g));
      res.termsUsed += static_cast<int>(e.terms.size());
      continue;
    }
    if (!(e.firstExponent > -1.0)) throw DomainError("series exponent must exceed -1");
    const int step = static_cast<int>(e.step);
    PowerExpansion::Cursor cur(e);
    double gam = g.value(e.firstExponent + 1.0);
    double pw = std::pow(pt.u, e.firstExponent) / std::pow(pt.v, e.firstExponent + 1.0);
    const double pwStep = std::pow(pt.u / pt.v, e.step);
    CompensatedSum part;
    double prev = 0.0;
    int small = 0, growing = 0;
    for (int n = 0;; ++n) {
      if (res.termsUsed >= ctx.maxTerms)
        throw NonConvergence("termwise transform: term budget of " +
                             std::to_string(ctx.maxTerms) + " exhausted");
      const PowerTerm t = cur.next();
      if (n > 0) {
        for (int j = 0; j < step; ++j) gam *= g.step(t.exponent - step + 1.0 + j);
        pw *= pwStep;
      }
      const double term = t.coefficient * pw * gam;
      ++res.termsUsed;
      if (!std::isfinite(term)) {
        res.status = SeriesStatus::Diverged;
        res.value = acc.value() + part.value();
        res.tailEstimate = std::numeric_limits<double>::infinity();
        return res;
      }
      part.add(term);
      if (formalOrder > 0) {
        if (n + 1 >= formalOrder) {
          tail += std::abs(term);
          break;
        }
        continue;
      }
      const double mag = std::abs(term);
      const double ratio = prev > 0.0 ? mag / prev : 0.0;
      growing = (n > 0 && ratio >= 1.0 && mag > 0.0) ? growing + 1 : 0;
      if (growing >= 10 && n >= 20) {
        res.status = SeriesStatus::Diverged;
        res.value = acc.value() + part.value();
        res.tailEstimate = std::numeric_limits<double>::infinity();
        return res;
      }
      small = mag <= ctx.stopTol() * std::max(std::abs(part.value()), 1e-300) ? small + 1 : 0;
      prev = mag;
      if (small >= 3 && ratio < 1.0) {
        tail += ratio > 0.0 ? mag * ratio / (1.0 - ratio) : 0.0;
        break;
      }
    }
    acc.add(part.value());
  }
  res.value = acc.value();
  res.tailEstimate = tail;
  res.status = formalOrder > 0 ? SeriesStatus::Truncated : classify_tail(res.value, tail, ctx);
  return res;
}

}  // namespace

SeriesResult nq_first_lattice(const Evaluable& f, TransformPoint pt, const QContext& ctx) {
  ctx.validate();
  pt.validate();
  const double c = pt.v / pt.u;
  auto k = [c, ctx](double t) { return first_kernel(ctx.q * c * t, ctx); };
  const double scale = ctx.anchor == LatticeAnchor::Adapted ? (1.0 - ctx.q) * c : 1.0;
  return scaled(jackson_improper(weighted(f, k), ctx, scale), 1.0 / pt.u);
}

SeriesResult nq_second_lattice(const Evaluable& f, TransformPoint pt, const QContext& ctx) {
  ctx.validate();
  pt.validate();
  const double c = pt.v / pt.u;
  auto k = [c, ctx](double t) { return second_kernel(c * t, ctx); };
  const double scale = ctx.anchor == LatticeAnchor::Adapted ? c : 1.0;
  return scaled(jackson_improper(weighted(f, k), ctx, scale), 1.0 / pt.u);
}

SeriesResult nq_first(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                      StrategyChoice strategy) {
  ctx.validate();
  pt.validate();
  switch (strategy.kind) {
    case StrategyKind::DirectLattice:
      return nq_first_lattice([&f, &ctx](double t) { return evaluate(f, t, ctx); }, pt, ctx);
    case StrategyKind::TermwiseGamma: return termwise(TransformKind::First, f, pt, ctx, 0);
    case StrategyKind::Formal:
      if (strategy.order < 1) throw DomainError("formal order must be at least 1");
      return termwise(TransformKind::First, f, pt, ctx, strategy.order);
  }
  throw DomainError("unknown strategy");
}

SeriesResult nq_second(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                       StrategyChoice strategy) {
  ctx.validate();
  pt.validate();
  switch (strategy.kind) {
    case StrategyKind::DirectLattice:
      return nq_second_lattice([&f, &ctx](double t) { return evaluate(f, t, ctx); }, pt, ctx);
    case StrategyKind::TermwiseGamma: return termwise(TransformKind::Second, f, pt, ctx, 0);
    case StrategyKind::Formal:
      if (strategy.order < 1) throw DomainError("formal order must be at least 1");
      return termwise(TransformKind::Second, f, pt, ctx, strategy.order);
  }
  throw DomainError("unknown strategy");
}

SeriesResult nq(TransformKind kind, const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                StrategyChoice strategy) {
  return kind == TransformKind::First ? nq_first(f, pt, ctx, strategy)
                                      : nq_second(f, pt, ctx, strategy);
}

}  // namespace qnat
