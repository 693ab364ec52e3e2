#pragma once

// Classical, q-Laplace, q-Sumudu and q-Natural transforms.

#include <string>
#include <utility>
#include <vector>

#include "qnat/context.hpp"
#include "qnat/function_spec.hpp"

namespace qnat {

/// Transform variables, both strictly positive.
struct TransformPoint {
  double u = 1.0;
  double v = 1.0;

  /// Throws DomainError unless u > 0 and v > 0.
  void validate() const;
};

enum class TransformKind { First, Second };

enum class StrategyKind { DirectLattice, TermwiseGamma, Formal };

struct StrategyChoice {
  StrategyKind kind = StrategyKind::TermwiseGamma;
  int order = 8;  // Formal only

  static StrategyChoice direct() { return {StrategyKind::DirectLattice, 8}; }
  static StrategyChoice termwise() { return {StrategyKind::TermwiseGamma, 8}; }
  static StrategyChoice formal(int order) { return {StrategyKind::Formal, order}; }
};

const char* to_string(TransformKind k);
const char* to_string(StrategyKind k);

/// Default strategy per kind: termwise for the first kind, the lattice sum
/// for the second.
StrategyChoice default_strategy(TransformKind k);

// Classical layer. q-functions are replaced by their q -> 1 limits.

/// int_0^inf f(ut) exp(-vt) dt by composite Simpson in s = sqrt(t),
/// refined until successive halvings agree to 1e-12.
/// Throws DivergentTransform when the exponential growth of f reaches v/u.
double natural_classical(const FunctionSpec& f, TransformPoint pt, const QContext& ctx);
double laplace_classical(const FunctionSpec& f, double v, const QContext& ctx);
double sumudu_classical(const FunctionSpec& f, double u, const QContext& ctx);

// q-Laplace and q-Sumudu transforms. The first kind uses the decaying
// kernel E_q(-q s t) on [0, 1/s] (resp. E_q(-q t/s) on [0, s]).
SeriesResult q_laplace(TransformKind kind, const FunctionSpec& f, double s, const QContext& ctx);
SeriesResult q_sumudu(TransformKind kind, const FunctionSpec& f, double s, const QContext& ctx);

/// First-kind q-Natural transform
/// (1/u) int_0^inf f(t) E_q(-q (v/u) t) d_q t.
///
/// DirectLattice sums the bilateral series. With the Adapted anchor the
/// lattice is q^k / ((1-q) v/u), on which the kernel vanishes for k < 0, so
/// the sum covers [0, u/((1-q)v)] exactly. With the Unit anchor the kernel
/// grows without bound as k -> -inf and the result is normally Diverged.
SeriesResult nq_first(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                      StrategyChoice strategy = StrategyChoice::termwise());

/// Second-kind q-Natural transform (1/u) int_0^inf f(t) e_q(-(v/u) t) d_q t.
/// The Adapted anchor places the lattice at q^k / (v/u).
SeriesResult nq_second(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                       StrategyChoice strategy = StrategyChoice::direct());

/// DirectLattice transforms of an arbitrary callable, on the lattice chosen
/// by ctx.anchor.
SeriesResult nq_first_lattice(const std::function<double(double)>& f, TransformPoint pt,
                              const QContext& ctx);
SeriesResult nq_second_lattice(const std::function<double(double)>& f, TransformPoint pt,
                               const QContext& ctx);

SeriesResult nq(TransformKind kind, const FunctionSpec& f, TransformPoint pt,
                const QContext& ctx, StrategyChoice strategy);

/// Which of two conflicting closed forms to return. Where no conflict is
/// known both variants coincide.
enum class ClosedVariant { Printed, Derived };

const char* to_string(ClosedVariant v);

/// Closed-form registry, first kind. Linear in Sum/Scale.
/// Throws UnknownForm outside the registry and DomainError when a geometric
/// form is requested with a u / v > 1 - 1e-6.
double nq_first_closed(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                       ClosedVariant variant = ClosedVariant::Printed);

/// Closed-form registry, second kind. e_q, cos^q and sin^q have only formal
/// series and throw DomainError here (see nq_second_formal).
double nq_second_closed(const FunctionSpec& f, TransformPoint pt, const QContext& ctx,
                        ClosedVariant variant = ClosedVariant::Printed);

double nq_closed(TransformKind kind, const FunctionSpec& f, TransformPoint pt,
                 const QContext& ctx, ClosedVariant variant = ClosedVariant::Printed);

/// True when the printed and derived closed forms of f differ.
bool has_closed_variants(TransformKind kind, const FunctionSpec& f);

/// Coefficients c_0..c_{order-1} of the second-kind transform written as a
/// formal power series sum_j c_j x^j in x = a u / v, for f = e_q(at),
/// cos^q(at) or sin^q(at). Printed reads them off the stated series;
/// Derived builds them term by term from gamma_second.
std::vector<double> nq_second_formal(const FunctionSpec& f, TransformPoint pt,
                                     const QContext& ctx, int order, ClosedVariant variant);

/// (f * g)_q(t) = int_0^t f(tau) g(t - q tau) d_q tau, with g = t^{beta-1}
/// and the shifted power read as the q-power
/// t^{beta-1} (q tau/t; q)_inf / (q^beta tau/t; q)_inf.
/// f must be a monomial, a power series or a linear combination of those.
SeriesResult q_convolution(const FunctionSpec& f, const FunctionSpec& g, double t,
                           const QContext& ctx);

/// Argument orderings probed for the second-kind derivative rule.
enum class SecondOrdering { A, B, C };  // (u, v/q), (u/q, v), (v/q, u)

const char* to_string(SecondOrdering o);

/// (LHS, RHS) of the transform-of-derivative rule for D_q^n f.
///
/// First kind: LHS = N_q(D_q^n f), RHS = (v/u)^n N_q f - sum_i (v/u)^{n-1-i}
/// D_q^i f(0) as printed; Derived multiplies the boundary sum by 1/u.
///
/// Second kind, Printed: (v/u)^n q^{-n} N^q f at the chosen ordering scaled
/// by q^{-n} minus the printed boundary sum. Derived: (v/u)^n q^{-n(n+1)/2}
/// N^q f(u, q^{-n} v) - (1/u) sum_i (v/u)^{n-1-i} q^{-(n-1-i)(n-i)/2}
/// D_q^i f(0); the ordering is ignored.
std::pair<double, double> derivative_rule_sides(TransformKind kind, const FunctionSpec& f, int n,
                                                TransformPoint pt, const QContext& ctx,
                                                ClosedVariant variant = ClosedVariant::Printed,
                                                SecondOrdering ordering = SecondOrdering::A);

}  // namespace qnat
