#include <algorithm>
#include <cmath>
#include <vector>

#include "qnat/transforms.hpp"

namespace qnat {

namespace {

// Exponential growth rate and largest power of the classical limit of a
// normalized FunctionSpec.
struct Growth {
  double rate = 0.0;
  double power = 0.0;
};

Growth growth(const FunctionSpec& f) {
  switch (f.kind) {
    case SpecKind::Monomial: return {0.0, std::max(0.0, f.param)};
    case SpecKind::PowerSeries: {
      const double n = f.coefficients.empty() ? 0.0 : f.coefficients.size() - 1.0;
      return {0.0, f.param * n};
    }
    case SpecKind::ExpClassical:
    case SpecKind::ExpFirst:
    case SpecKind::ExpSecond: return {f.param, 0.0};
    case SpecKind::CoshSecond:
    case SpecKind::SinhSecond: return {std::abs(f.param), 0.0};
    case SpecKind::Sum: {
      Growth g{-HUGE_VAL, 0.0};
      for (const auto& c : f.children) {
        const Growth h = growth(c);
        g.rate = std::max(g.rate, h.rate);
        g.power = std::max(g.power, h.power);
      }
      if (f.children.empty()) g.rate = 0.0;
      return g;
    }
    case SpecKind::Scale: return growth(f.children.front());
    default: return {0.0, 0.0};
  }
}

void breakpoints(const FunctionSpec& f, std::vector<double>& out) {
  if (f.kind == SpecKind::Heaviside && f.param > 0.0) out.push_back(f.param);
  for (const auto& c : f.children) breakpoints(c, out);
}

// Simpson on [a, b] with repeated halving. Endpoints are nudged inward so
// that jumps placed at segment ends are sampled from the inside.
double simpson(const std::function<double(double)>& g, double a, double b) {
  const double nudge = 1e-14 * (b - a);
  double ends = g(a + nudge) + g(b - nudge);
  int n = 64;
  double h = (b - a) / n;
  double odd = 0.0, even = 0.0, absSum = std::abs(ends);
  for (int i = 1; i < n; ++i) {
    const double y = g(a + i * h);
    (i % 2 ? odd : even) += y;
    absSum += std::abs(y);
  }
  double prev = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
  while (n < (1 << 22)) {
    even += odd;
    odd = 0.0;
    n *= 2;
    h /= 2.0;
    for (int i = 1; i < n; i += 2) {
      const double y = g(a + i * h);
      odd += y;
      absSum += std::abs(y);
    }
    const double cur = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
    const double scale = std::max(std::abs(cur), absSum * h / 2.0);
    if (std::abs(cur - prev) <= 1e-13 * scale) return cur + (cur - prev) / 15.0;
    prev = cur;
  }
  throw NonConvergence("classical quadrature did not settle");
}

// int_0^inf g(sigma t) exp(-rho t) dt for a normalized g.
double weighted_integral(const FunctionSpec& g, double sigma, double rho) {
  const Growth gr = growth(g);
  const double decay = rho - sigma * gr.rate;
  if (!(decay > 0.0))
    throw DivergentTransform("classical transform diverges: growth rate times u reaches v");

  double T = 40.0 / decay;
  while (gr.power * std::log(std::max(T, 1.0)) - decay * T > -40.0) T *= 1.5;

  // t = s^2 removes the t^alpha endpoint behaviour for alpha > -1/2.
  auto integrand = [&](double s) {
    const double t = s * s;
    return evaluate_classical_limit(g, sigma * t) * std::exp(-rho * t) * 2.0 * s;
  };

  std::vector<double> cuts{0.0};
  std::vector<double> shifts;
  breakpoints(g, shifts);
  for (double a : shifts)
    if (a / sigma < T) cuts.push_back(std::sqrt(a / sigma));
  cuts.push_back(std::sqrt(T));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += simpson(integrand, cuts[i], cuts[i + 1]);
  return total;
}

}  // namespace

double natural_classical(const FunctionSpec& f, TransformPoint pt, const QContext& ctx) {
  pt.validate();
  return weighted_integral(normalize(f, ctx), pt.u, pt.v);
}

// Laplace and Sumudu go through x = s t with unit decay, so their samples
// differ from the Natural transform's at the reduction points.
double laplace_classical(const FunctionSpec& f, double v, const QContext& ctx) {
  if (!(v > 0.0)) throw DomainError("laplace_classical: v must be positive");
  return weighted_integral(normalize(f, ctx), 1.0 / v, 1.0) / v;
}

double sumudu_classical(const FunctionSpec& f, double u, const QContext& ctx) {
  if (!(u > 0.0)) throw DomainError("sumudu_classical: u must be positive");
  return weighted_integral(normalize(f, ctx), u, 1.0);
}

}  // namespace qnat
