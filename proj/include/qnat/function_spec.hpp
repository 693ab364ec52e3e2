#pragma once

// Symbolic descriptors of transform inputs.

#include <functional>
#include <optional>
#include <vector>

#include "qnat/context.hpp"

namespace qnat {

enum class SpecKind {
  Constant,      // c
  Monomial,      // t^alpha
  ExpClassical,  // exp(a t)
  ExpFirst,      // E_q(a t)
  ExpSecond,     // e_q(a t)
  SinSecond,     // sin^q(a t)
  CosSecond,     // cos^q(a t)
  SinFirst,      // sin_q(a t)
  CosFirst,      // cos_q(a t)
  CoshSecond,    // cosh^q(a t)
  SinhSecond,    // sinh^q(a t)
  Heaviside,     // H(t - a), a >= 0, zero at t = a
  PowerSeries,   // sum_i c_i t^{alpha i}
  Sum,
  Scale,     // c * inner(t)
  ArgScale,  // inner(k t)
};

/// Value-semantic expression tree. `param` holds the single scalar of each
/// node (c, alpha, a, shift, factor, or the exponent step of a power
/// series).
struct FunctionSpec {
  SpecKind kind = SpecKind::Constant;
  double param = 0.0;
  std::vector<double> coefficients;
  std::vector<FunctionSpec> children;

  static FunctionSpec constant(double c);
  static FunctionSpec monomial(double alpha);
  static FunctionSpec exp_classical(double a);
  static FunctionSpec exp_first(double a);
  static FunctionSpec exp_second(double a);
  static FunctionSpec sin_second(double a);
  static FunctionSpec cos_second(double a);
  static FunctionSpec sin_first(double a);
  static FunctionSpec cos_first(double a);
  static FunctionSpec cosh_second(double a);
  static FunctionSpec sinh_second(double a);
  static FunctionSpec heaviside(double shift);
  static FunctionSpec power_series(std::vector<double> coefficients, double step);
  static FunctionSpec sum(std::vector<FunctionSpec> terms);
  static FunctionSpec scale(double c, FunctionSpec inner);
  static FunctionSpec arg_scale(double k, FunctionSpec inner);

  bool operator==(const FunctionSpec&) const = default;
};

/// True for the leaf kinds parameterised by a frequency `a`.
bool is_frequency_leaf(SpecKind kind);

/// Pointwise value at t >= 0 with q-functions taken at ctx.q.
/// Second-kind functions throw DomainError outside their series radius,
/// except e_q at negative arguments (evaluated as 1/E_q).
double evaluate(const FunctionSpec& f, double t, const QContext& ctx);

/// Pointwise value of the q -> 1 limit: every q-exponential becomes exp,
/// every q-trigonometric or q-hyperbolic function its classical namesake.
double evaluate_classical_limit(const FunctionSpec& f, double t);

/// Wraps `evaluate` as a callable.
std::function<double(double)> as_evaluable(const FunctionSpec& f, const QContext& ctx);

/// Pushes ArgScale nodes into the leaves and flattens nested sums.
/// Throws DomainError for a nonpositive argument scale.
FunctionSpec normalize(const FunctionSpec& f, const QContext& ctx);

/// Symbolic q-derivative, when the family is closed under D_q. Returns
/// nullopt for Heaviside, classical exponentials and first-kind q-trig.
std::optional<FunctionSpec> q_derivative_spec(const FunctionSpec& f, const QContext& ctx);

/// n-fold symbolic q-derivative.
std::optional<FunctionSpec> q_derivative_spec(const FunctionSpec& f, int n,
                                              const QContext& ctx);

/// One term c * t^e of a power expansion.
struct PowerTerm {
  double coefficient = 0.0;
  double exponent = 0.0;
};

/// A power expansion: either a finite list of terms or the infinite series
/// c_0 t^{e_0} + c_1 t^{e_0 + step} + ... with c_n = c_{n-1} * ratio(n).
struct PowerExpansion {
  std::vector<PowerTerm> terms;
  bool infinite = false;
  double firstCoefficient = 0.0;
  double firstExponent = 0.0;
  double step = 1.0;
  std::function<double(int)> ratio;

  /// Cursor over the terms in order.
  class Cursor {
   public:
    explicit Cursor(const PowerExpansion& e) : e_(e) {}
    bool done() const { return !e_.infinite && n_ >= static_cast<int>(e_.terms.size()); }
    int index() const { return n_; }
    PowerTerm next();

   private:
    const PowerExpansion& e_;
    int n_ = 0;
    double c_ = 0.0;
  };
};

/// Expands f into power expansions (one per summand of its normal form).
/// Throws DomainError for kinds with no power expansion (Heaviside).
std::vector<PowerExpansion> expand(const FunctionSpec& f, const QContext& ctx);

}  // namespace qnat
