#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qnat/qcalc.hpp"
#include "qnat/qcore.hpp"
#include "qnat/qspecial.hpp"
#include "verify_internal.hpp"

namespace qnat::detail {

namespace {

using F = FunctionSpec;
constexpr auto kPrinted = ClosedVariant::Printed;
constexpr auto kDerived = ClosedVariant::Derived;

TransformPoint point(const AuditParams& p) { return {p.u, p.v}; }

double value(const SeriesResult& r, Sides& s) {
  if (r.status == SeriesStatus::Diverged) s.diverged = true;
  return r.value;
}

Sides sides(double lhs, double rhs, double scale = 0.0) {
  Sides s;
  s.lhs = lhs;
  s.rhs = rhs;
  s.scale = scale;
  return s;
}

F q_leaf(SpecKind kind, double a) {
  F f;
  f.kind = kind;
  f.param = a;
  return f;
}

// Termwise transform against a first-kind closed form.
Evaluator first_termwise_vs_closed(SpecKind kind, ClosedVariant variant) {
  return [kind, variant](const AuditParams& p, const QContext& c) {
    const F f = q_leaf(kind, kind == SpecKind::Monomial ? p.alpha : p.a);
    Sides s;
    s.lhs = value(nq_first(f, point(p), c, StrategyChoice::termwise()), s);
    s.rhs = nq_first_closed(f, point(p), c, variant);
    return s;
  };
}

// Lattice transform against a second-kind closed form.
Evaluator second_lattice_vs_closed(SpecKind kind, ClosedVariant variant) {
  return [kind, variant](const AuditParams& p, const QContext& c) {
    const F f = q_leaf(kind, kind == SpecKind::Monomial ? p.alpha : p.a);
    Sides s;
    s.lhs = value(nq_second(f, point(p), c, StrategyChoice::direct()), s);
    s.rhs = nq_second_closed(f, point(p), c, variant);
    return s;
  };
}

Sides first_monomial_lattice(const AuditParams& p, const QContext& c) {
  const F f = F::monomial(p.alpha);
  Sides s;
  s.lhs = value(nq_first(f, point(p), c, StrategyChoice::direct()), s);
  s.rhs = nq_first_closed(f, point(p), c);
  return s;
}

// D_q E_q(-q c t) against the stated series and against -q c E_q(-q^2 c t).
Evaluator first_kernel_derivative(ClosedVariant variant) {
  return [variant](const AuditParams& p, const QContext& ctx) {
    const double c = p.v / p.u, q = ctx.q;
    auto kernel = [c, ctx](double x) { return exp_first(-ctx.q * c * x, ctx).value; };
    const double lhs = q_derivative(kernel, p.t, ctx);
    if (variant == kDerived) return sides(lhs, -q * c * exp_first(-q * q * c * p.t, ctx).value);
    double sum = 0.0, scale = 0.0;
    for (int n = 0; n < ctx.maxTerms; ++n) {
      const double term = (n % 2 ? 1.0 : -1.0) * std::pow(q, (n + 1) * (n + 2) / 2.0) *
                          std::pow(c * p.t, n);
      sum += term;
      scale = std::max(scale, std::abs(term));
      if (std::abs(term) <= ctx.stopTol() * std::abs(sum) && n > 2) break;
    }
    return sides(lhs, c * sum, c * scale);
  };
}

Evaluator first_derivative_rule(ClosedVariant variant) {
  return [variant](const AuditParams& p, const QContext& c) {
    const F f = F::monomial(p.alpha);
    const auto [l, r] = derivative_rule_sides(TransformKind::First, f, p.n, point(p), c, variant);
    const double main = std::pow(p.v / p.u, p.n) * nq_first_closed(f, point(p), c);
    return sides(l, r, std::abs(main));
  };
}

// N_q of the q-convolution against u^m N_q(f) N_q(t^{beta-1}), m = 2 as
// stated or m = 1.
Evaluator first_convolution(ClosedVariant variant, bool series) {
  return [variant, series](const AuditParams& p, const QContext& c) {
    const F f = series ? F::power_series(p.coefficients, p.alpha) : F::monomial(p.alpha);
    const F g = F::monomial(p.beta - 1.0);
    const Evaluable conv = [f, g, c](double t) { return q_convolution(f, g, t, c).value; };
    Sides s;
    s.lhs = value(nq_first_lattice(conv, point(p), c), s);
    const double uPow = variant == kPrinted ? p.u * p.u : p.u;
    s.rhs = uPow * nq_first_closed(f, point(p), c) * nq_first_closed(g, point(p), c);
    return s;
  };
}

// (1/u) [int_0^inf K - int_0^a K] against (1/v) E_q(-(v/u) a).
Sides first_heaviside(const AuditParams& p, const QContext& c) {
  const double k = p.v / p.u;
  Sides s;
  const double whole = value(nq_first(F::constant(1.0), point(p), c, StrategyChoice::direct()), s);
  const Evaluable kernel = [k, c](double t) { return exp_first(-c.q * k * t, c).value; };
  const double head = p.a > 0.0 ? value(jackson_finite(kernel, p.a, c), s) / p.u : 0.0;
  s.lhs = whole - head;
  s.rhs = nq_first_closed(F::heaviside(p.a), point(p), c);
  s.scale = std::abs(whole);
  return s;
}

}  // namespace

namespace {

Sides second_gamma_unit(const AuditParams&, const QContext& c) {
  Sides s;
  s.lhs = value(gamma_second(1.0, c), s);
  s.rhs = 1.0;
  return s;
}

Sides second_gamma_recursion(const AuditParams& p, const QContext& c) {
  Sides s;
  s.lhs = value(gamma_second(p.alpha + 1.0, c), s);
  s.rhs = std::pow(c.q, -p.alpha) * q_bracket(p.alpha, c) * value(gamma_second(p.alpha, c), s);
  return s;
}

// gamma_q(n) against q^{+-n(n-1)/2} Gamma_q(n).
Evaluator second_gamma_integer(ClosedVariant variant) {
  return [variant](const AuditParams& p, const QContext& c) {
    const double e = p.n * (p.n - 1.0) / 2.0 * (variant == kPrinted ? 1.0 : -1.0);
    Sides s;
    s.lhs = value(gamma_second(p.n, c), s);
    s.rhs = std::pow(c.q, e) * value(gamma_first(p.n, c), s);
    return s;
  };
}

// Coefficients of x = a u / v in the derived expansion of the second-kind
// transforms of e_q, cos^q and sin^q.
double derived_formal_coefficient(SpecKind kind, int j, double q, double v) {
  switch (kind) {
    case SpecKind::ExpSecond: return std::pow(q, -j * (j + 1.0) / 2.0) / v;
    case SpecKind::CosSecond:
      if (j % 2) return 0.0;
      return ((j / 2) % 2 ? -1.0 : 1.0) * std::pow(q, -(j / 2) * (j + 1.0)) / v;
    default: {
      if (j % 2 == 0) return 0.0;
      const int n = (j - 1) / 2;
      return (n % 2 ? -1.0 : 1.0) * std::pow(q, -j * (j + 1.0) / 2.0) / v;
    }
  }
}

Evaluator second_formal(SpecKind kind, ClosedVariant variant) {
  return [kind, variant](const AuditParams& p, const QContext& c) {
    const F f = q_leaf(kind, p.a);
    const auto lhs = nq_second_formal(f, point(p), c, p.n, kDerived);
    std::vector<double> rhs;
    if (variant == kPrinted) {
      rhs = nq_second_formal(f, point(p), c, p.n, kPrinted);
    } else {
      for (int j = 0; j < p.n; ++j) rhs.push_back(derived_formal_coefficient(kind, j, c.q, p.v));
    }
    Sides s;
    double worst = -1.0;
    for (int j = 0; j < p.n; ++j) {
      const double m = std::max(std::abs(lhs[j]), std::abs(rhs[j]));
      const double err = m == 0.0 ? 0.0 : std::abs(lhs[j] - rhs[j]) / m;
      s.rows.push_back({j, lhs[j], rhs[j], err});
      if (err > worst) {
        worst = err;
        s.lhs = lhs[j];
        s.rhs = rhs[j];
      }
    }
    return s;
  };
}

// N^q E_q(at) on the adapted lattice with the integrand formed as one
// product of bounded ratios (1 + (1-q) a t q^j) / (1 + (1-q) c t q^j); the
// separate factors overflow long before their ratio becomes negligible.
Evaluator second_exp1(ClosedVariant variant) {
  return [variant](const AuditParams& p, const QContext& ctx) {
    const double c = p.v / p.u, q = ctx.q, a = p.a;
    QContext wide = ctx;
    wide.latticeKMin = std::min(ctx.latticeKMin, -200);
    wide.maxTerms = std::max(ctx.maxTerms, wide.latticeKMax - wide.latticeKMin + 1);
    const Evaluable integrand = [c, q, a](double t) {
      double prod = 1.0, qj = 1.0;
      for (int j = 0; j < 100000; ++j, qj *= q) {
        const double A = (1.0 - q) * a * t * qj, C = (1.0 - q) * c * t * qj;
        prod *= (1.0 + A) / (1.0 + C);
        if (C < 1e-18) break;
      }
      return prod;
    };
    Sides s;
    s.lhs = value(jackson_improper(integrand, wide, c), s) / p.u;
    s.rhs = nq_second_closed(F::exp_first(a), point(p), ctx, variant);
    return s;
  };
}

Sides second_kernel_derivative(const AuditParams& p, const QContext& c) {
  const double k = p.v / p.u;
  auto kernel = [k, c](double x) { return exp_second_extended(-k * x, c); };
  return sides(q_derivative(kernel, p.t, c), -k * kernel(p.t));
}

Evaluator second_derivative_rule(ClosedVariant variant, SecondOrdering ordering, bool series) {
  return [variant, ordering, series](const AuditParams& p, const QContext& c) {
    const F f = series ? F::power_series(p.coefficients, 1.0) : F::monomial(p.alpha);
    const auto [l, r] =
        derivative_rule_sides(TransformKind::Second, f, p.n, point(p), c, variant, ordering);
    return sides(l, r);
  };
}

// Classical layer.

F classical_input(const AuditParams& p) {
  return p.a != 0.0 ? F::exp_classical(p.a) : F::monomial(p.alpha);
}

double factorial(int n) { return std::tgamma(n + 1.0); }

Sides classical_constant(const AuditParams& p, const QContext& c) {
  return sides(natural_classical(F::constant(1.0), point(p), c), 1.0 / p.v);
}

Sides classical_exp(const AuditParams& p, const QContext& c) {
  return sides(natural_classical(F::exp_classical(p.a), point(p), c), 1.0 / (p.v - p.a * p.u));
}

Sides classical_monomial(const AuditParams& p, const QContext& c) {
  const int n = static_cast<int>(p.alpha);
  return sides(natural_classical(F::monomial(n), point(p), c),
               factorial(n) * std::pow(p.u, n) / std::pow(p.v, n + 1));
}

Sides classical_laplace_reduction(const AuditParams& p, const QContext& c) {
  const F f = classical_input(p);
  return sides(natural_classical(f, {1.0, p.v}, c), laplace_classical(f, p.v, c));
}

Sides classical_sumudu_reduction(const AuditParams& p, const QContext& c) {
  const F f = classical_input(p);
  return sides(natural_classical(f, {p.u, 1.0}, c), sumudu_classical(f, p.u, c));
}

// N f(u;v) against (1/u) L f at u/v (as stated) or at v/u.
Evaluator classical_duality(ClosedVariant variant) {
  return [variant](const AuditParams& p, const QContext& c) {
    const F f = classical_input(p);
    const double s = variant == kPrinted ? p.u / p.v : p.v / p.u;
    return sides(natural_classical(f, point(p), c), laplace_classical(f, s, c) / p.u);
  };
}

// Transform of f(kt) against (1/k) N f(ku;v) as stated, N f(ku;v), or
// (1/k) N f(u; v/k).
enum class ScalingForm { Printed, Derived, Second };

Evaluator classical_scaling(ScalingForm form) {
  return [form](const AuditParams& p, const QContext& c) {
    const F f = F::exp_classical(1.0);
    const double lhs = natural_classical(F::arg_scale(p.k, f), point(p), c);
    double rhs;
    switch (form) {
      case ScalingForm::Printed: rhs = natural_classical(f, {p.k * p.u, p.v}, c) / p.k; break;
      case ScalingForm::Derived: rhs = natural_classical(f, {p.k * p.u, p.v}, c); break;
      default: rhs = natural_classical(f, {p.u, p.v / p.k}, c) / p.k; break;
    }
    return sides(lhs, rhs);
  };
}

}  // namespace

namespace {

using Grid = std::vector<AuditParams>;
const std::vector<std::pair<double, double>> kPoints{{1.0, 1.0}, {1.0, 2.0}, {2.0, 3.0}};

AuditParams at(double q, double u, double v) {
  AuditParams p;
  p.q = q;
  p.u = u;
  p.v = v;
  return p;
}

template <class Fn>
GridFn over_points(std::vector<std::pair<double, double>> pts, Fn each) {
  return [pts, each](double q, const std::vector<double>& ratios) {
    Grid g;
    for (const auto& [u, v] : pts) each(g, at(q, u, v), ratios);
    return g;
  };
}

template <class Fn>
GridFn over_points(Fn each) {
  return over_points(kPoints, each);
}

GridFn values_of(std::vector<double> xs, double AuditParams::*field,
                 std::vector<std::pair<double, double>> pts = kPoints) {
  return over_points(pts, [xs, field](Grid& g, AuditParams p, const std::vector<double>&) {
    for (double x : xs) {
      p.*field = x;
      g.push_back(p);
    }
  });
}

// a chosen so that a u / v runs over the ratios, times `factor` (q for the
// identities whose radius is q).
GridFn ratio_grid(bool timesQ, int formalOrder = 0) {
  return over_points([timesQ, formalOrder](Grid& g, AuditParams p, const std::vector<double>& rs) {
    for (double r : rs) {
      p.a = r * (timesQ ? p.q : 1.0) * p.v / p.u;
      if (formalOrder > 0) p.n = formalOrder;
      g.push_back(p);
    }
  });
}

GridFn single() {
  return [](double q, const std::vector<double>&) { return Grid{at(q, 1.0, 1.0)}; };
}

GridFn first_derivative_grid(bool boundary) {
  return [boundary](double q, const std::vector<double>&) {
    Grid g;
    if (!boundary) {
      for (const auto& [u, v] : kPoints)
        for (int m = 1; m <= 4; ++m)
          for (int n = 1; n <= 3; ++n) {
            if (u != 1.0 && m < n) continue;
            AuditParams p = at(q, u, v);
            p.alpha = m;
            p.n = n;
            g.push_back(p);
          }
      return g;
    }
    for (const auto& [u, v] : {std::pair{2.0, 3.0}, std::pair{0.5, 1.0}})
      for (int m = 0; m <= 2; ++m)
        for (int n = m + 1; n <= 3; ++n) {
          AuditParams p = at(q, u, v);
          p.alpha = m;
          p.n = n;
          g.push_back(p);
        }
    return g;
  };
}

GridFn convolution_grid(std::vector<std::pair<double, double>> pts, bool series) {
  return over_points(pts, [series](Grid& g, AuditParams p, const std::vector<double>&) {
    const std::vector<double> alphas = series ? std::vector<double>{1.0, 0.5}
                                              : std::vector<double>{0.5, 1.0, 2.0};
    for (double a : alphas)
      for (double b : {0.5, 1.0, 2.0}) {
        p.alpha = a;
        p.beta = b;
        if (series) p.coefficients = {1.0, -0.5, 0.25, 2.0};
        g.push_back(p);
      }
  });
}

GridFn heaviside_grid() {
  return over_points([](Grid& g, AuditParams p, const std::vector<double>&) {
    for (double a : {0.0, 1.0, p.q, p.q * p.q, p.q * p.q * p.q}) {
      p.a = a;
      g.push_back(p);
    }
  });
}

GridFn integer_n(std::vector<int> ns) {
  return [ns](double q, const std::vector<double>&) {
    Grid g;
    for (int n : ns) {
      AuditParams p = at(q, 1.0, 1.0);
      p.n = n;
      g.push_back(p);
    }
    return g;
  };
}

GridFn second_derivative_grid(int kind) {
  // 0: first-order probe, 1: n-th order, 2: boundary term.
  if (kind == 2) {
    return over_points({{2.0, 3.0}, {0.5, 1.0}},
                       [](Grid& g, AuditParams p, const std::vector<double>&) {
                         p.n = 1;
                         for (auto cs : {std::vector<double>{1.0, 1.0},
                                         std::vector<double>{2.0, -1.0, 0.3}}) {
                           p.coefficients = cs;
                           g.push_back(p);
                         }
                       });
  }
  return over_points([kind](Grid& g, AuditParams p, const std::vector<double>&) {
    if (kind == 0) {
      p.n = 1;
      for (int m = 1; m <= 3; ++m) {
        p.alpha = m;
        g.push_back(p);
      }
      return;
    }
    for (int n = 2; n <= 3; ++n)
      for (int m = n; m <= n + 1; ++m) {
        p.n = n;
        p.alpha = m;
        g.push_back(p);
      }
  });
}

GridFn classical_inputs(std::vector<std::pair<double, double>> pts) {
  return over_points(pts, [](Grid& g, AuditParams p, const std::vector<double>&) {
    for (double alpha : {0.0, 1.0, 2.0, 3.0}) {
      p.alpha = alpha;
      g.push_back(p);
    }
    p.alpha = 0.0;
    p.a = 0.4;
    g.push_back(p);
  });
}

GridFn scaling_grid() {
  return over_points({{0.3, 2.0}}, [](Grid& g, AuditParams p, const std::vector<double>&) {
    for (double k : {2.0, 3.0}) {
      p.k = k;
      g.push_back(p);
    }
  });
}

}  // namespace

const std::vector<IdentityEntry>& registry_entries() {
  static const std::vector<IdentityEntry> entries = [] {
    std::vector<IdentityEntry> r;
    auto add = [&r](std::string id, std::string group, std::string description, double tol,
                    bool erratum, Evaluator e, GridFn g, EvalMode mode = EvalMode::Numeric) {
      r.push_back({{std::move(id), std::move(group), std::move(description), tol, mode, erratum},
                   std::move(e), std::move(g)});
    };
    auto pair = [&](const std::string& group, const std::string& description, double tol,
                    const std::function<Evaluator(ClosedVariant)>& make, const GridFn& grid,
                    EvalMode mode = EvalMode::Numeric) {
      add(group + "_PRINTED", group, description + " (as stated)", tol, true, make(kPrinted), grid,
          mode);
      add(group + "_DERIVED", group, description + " (derived)", tol, true, make(kDerived), grid,
          mode);
    };
    const std::vector<double> alphas{0.0, 0.5, 1.0, 2.0, 3.0, 3.5, 4.0, 5.0};

    // First kind.
    add("FIRST_MONOMIAL", "FIRST_MONOMIAL", "termwise N_q t^a = u^a Gamma_q(a+1)/v^(a+1)", 1e-8,
        false, first_termwise_vs_closed(SpecKind::Monomial, kPrinted),
        values_of(alphas, &AuditParams::alpha));
    add("FIRST_MONOMIAL_LATTICE", "FIRST_MONOMIAL_LATTICE",
        "lattice N_q t^a = u^a Gamma_q(a+1)/v^(a+1)", 1e-8, false, first_monomial_lattice,
        values_of(alphas, &AuditParams::alpha));
    add("FIRST_EXP2", "FIRST_EXP2", "N_q e_q(at) = 1/(v-au)", 1e-8, false,
        first_termwise_vs_closed(SpecKind::ExpSecond, kPrinted), ratio_grid(false));
    add("FIRST_EXP1", "FIRST_EXP1", "N_q E_q(at) = (1/v) sum q^(n(n-1)/2) (au/v)^n", 1e-8, false,
        first_termwise_vs_closed(SpecKind::ExpFirst, kPrinted), ratio_grid(false));
    for (auto [name, kind] : {std::pair{"COS2", SpecKind::CosSecond},
                              std::pair{"SIN2", SpecKind::SinSecond},
                              std::pair{"COSH2", SpecKind::CoshSecond},
                              std::pair{"SINH2", SpecKind::SinhSecond}}) {
      pair(std::string("FIRST_") + name, std::string("N_q of ") + name + " closed form", 1e-8,
           [kind](ClosedVariant v) { return first_termwise_vs_closed(kind, v); },
           ratio_grid(false));
    }
    pair("FIRST_KERNEL_DERIV", "D_q E_q(-q(v/u)t)", 1e-10, first_kernel_derivative,
         values_of({0.5, 1.0}, &AuditParams::t));
    add("FIRST_DERIV_RULE", "FIRST_DERIV_RULE",
        "N_q D_q^n f = (v/u)^n N_q f - sum (v/u)^(n-1-i) D_q^i f(0), boundary-free grid", 1e-10,
        false, first_derivative_rule(kPrinted), first_derivative_grid(false));
    pair("FIRST_DERIV_BOUNDARY", "derivative rule boundary term at u != 1", 1e-10,
         first_derivative_rule, first_derivative_grid(true));
    add("FIRST_CONV", "FIRST_CONV", "N_q (t^a * t^(b-1))_q = u^2 N_q t^a N_q t^(b-1) at u = 1",
        1e-8, false, first_convolution(kPrinted, false),
        convolution_grid({{1.0, 1.0}, {1.0, 2.0}}, false));
    add("FIRST_CONV_SERIES", "FIRST_CONV_SERIES",
        "convolution rule for a four-term power series at u = 1", 1e-8, false,
        first_convolution(kPrinted, true), convolution_grid({{1.0, 1.0}, {1.0, 2.0}}, true));
    pair("FIRST_CONV_UFACTOR", "convolution rule power of u at u != 1", 1e-8,
         [](ClosedVariant v) { return first_convolution(v, false); },
         convolution_grid({{2.0, 3.0}, {0.5, 1.0}}, false));
    add("FIRST_HEAVISIDE", "FIRST_HEAVISIDE", "N_q H(t-a) = (1/v) E_q(-(v/u)a)", 1e-12, false,
        first_heaviside, heaviside_grid());

    // Second kind.
    add("SECOND_GAMMA_UNIT", "SECOND_GAMMA_UNIT", "gamma_q(1) = 1", 1e-10, false,
        second_gamma_unit, single());
    add("SECOND_GAMMA_RECURSION", "SECOND_GAMMA_RECURSION",
        "gamma_q(t+1) = q^(-t) [t]_q gamma_q(t)", 1e-6, false, second_gamma_recursion,
        values_of({1.0, 1.5, 2.0, 3.0}, &AuditParams::alpha, {{1.0, 1.0}}));
    pair("SECOND_GAMMA_INTEGER", "gamma_q(n) = q^(n(n-1)/2) Gamma_q(n) sign of exponent", 1e-6,
         second_gamma_integer, integer_n({2, 3, 4}));
    add("SECOND_MONOMIAL", "SECOND_MONOMIAL", "lattice N^q t^a = u^a gamma_q(a+1)/v^(a+1)", 1e-6,
        false, second_lattice_vs_closed(SpecKind::Monomial, kPrinted),
        values_of({0.0, 0.5, 1.5, 2.5}, &AuditParams::alpha));
    pair("SECOND_MONOMIAL_INTEGER", "N^q t^n factorial form", 1e-6,
         [](ClosedVariant v) { return second_lattice_vs_closed(SpecKind::Monomial, v); },
         values_of({1.0, 2.0, 3.0}, &AuditParams::alpha));
    pair("SECOND_EXP1", "N^q E_q(at) closed form", 1e-6,
         second_exp1,
         ratio_grid(true));
    for (auto [name, kind] : {std::pair{"EXP2", SpecKind::ExpSecond},
                              std::pair{"COS2", SpecKind::CosSecond},
                              std::pair{"SIN2", SpecKind::SinSecond}}) {
      pair(std::string("SECOND_") + name + "_FORMAL",
           std::string("formal N^q of ") + name + " coefficients in au/v", 1e-6,
           [kind](ClosedVariant v) { return second_formal(kind, v); }, ratio_grid(false, 8),
           EvalMode::Formal);
    }
    add("SECOND_KERNEL_DERIV", "SECOND_KERNEL_DERIV", "D_q e_q(-(v/u)t) = -(v/u) e_q(-(v/u)t)",
        1e-10, false, second_kernel_derivative, values_of({0.5, 1.0}, &AuditParams::t));
    for (auto [name, o] : {std::pair{"A", SecondOrdering::A}, std::pair{"B", SecondOrdering::B},
                           std::pair{"C", SecondOrdering::C}}) {
      add(std::string("SECOND_DERIV_ORDER_") + name, "SECOND_DERIV_ORDER",
          std::string("N^q D_q f argument ordering ") + name, 1e-8, true,
          second_derivative_rule(kPrinted, o, false), second_derivative_grid(0));
    }
    pair("SECOND_DERIV_NTH", "N^q D_q^n f power of q", 1e-8,
         [](ClosedVariant v) { return second_derivative_rule(v, SecondOrdering::A, false); },
         second_derivative_grid(1));
    pair("SECOND_DERIV_BOUNDARY", "N^q D_q f boundary term at u != 1", 1e-8,
         [](ClosedVariant v) { return second_derivative_rule(v, SecondOrdering::A, true); },
         second_derivative_grid(2));

    // Classical layer.
    add("CLASSICAL_CONSTANT", "CLASSICAL_CONSTANT", "N(1) = 1/v", 1e-10, false,
        classical_constant, over_points([](Grid& g, AuditParams p, const std::vector<double>&) {
          g.push_back(p);
        }));
    add("CLASSICAL_EXP", "CLASSICAL_EXP", "N(exp(at)) = 1/(v-au)", 1e-10, false, classical_exp,
        ratio_grid(false));
    add("CLASSICAL_MONOMIAL", "CLASSICAL_MONOMIAL", "N(t^n) = n! u^n / v^(n+1)", 1e-10, false,
        classical_monomial, values_of({1.0, 2.0, 3.0}, &AuditParams::alpha));
    add("CLASSICAL_LAPLACE", "CLASSICAL_LAPLACE", "N f(1;v) = L f(v)", 1e-10, false,
        classical_laplace_reduction, classical_inputs(kPoints));
    add("CLASSICAL_SUMUDU", "CLASSICAL_SUMUDU", "N f(u;1) = S f(u)", 1e-10, false,
        classical_sumudu_reduction, classical_inputs(kPoints));
    pair("CLASSICAL_DUALITY", "N f(u;v) = (1/u) L f argument order", 1e-10, classical_duality,
         classical_inputs({{2.0, 3.0}, {1.0, 2.0}, {3.0, 2.0}}));
    add("CLASSICAL_SCALING_PRINTED", "CLASSICAL_SCALING",
        "N f(kt)(u;v) = (1/k) N f(ku;v) (as stated)", 1e-10, true,
        classical_scaling(ScalingForm::Printed), scaling_grid());
    add("CLASSICAL_SCALING_DERIVED", "CLASSICAL_SCALING", "N f(kt)(u;v) = N f(ku;v) (derived)",
        1e-10, true, classical_scaling(ScalingForm::Derived), scaling_grid());
    add("CLASSICAL_SCALING_SECOND", "CLASSICAL_SCALING_SECOND",
        "N f(kt)(u;v) = (1/k) N f(u;v/k)", 1e-10, false, classical_scaling(ScalingForm::Second),
        scaling_grid());
    return r;
  }();
  return entries;
}

}  // namespace qnat::detail
