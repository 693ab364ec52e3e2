#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qnat/qcalc.hpp"
#include "qnat/qcore.hpp"
#include "qnat/qspecial.hpp"

using namespace qnat;

namespace {

QContext at(double q) {
  QContext c;
  c.q = q;
  c.maxTerms = 5000;
  return c;
}

// Random polynomial with up to `deg` + 1 coefficients in [-2, 2].
std::vector<double> random_poly(std::mt19937& rng, int deg) {
  std::uniform_real_distribution<double> cd(-2.0, 2.0);
  std::vector<double> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = cd(rng);
  return c;
}

double horner(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

// D_q of a polynomial, coefficientwise: t^k -> [k] t^{k-1}.
std::vector<double> dq_poly(const std::vector<double>& c, const QContext& ctx) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * q_bracket(k, ctx));
  if (d.empty()) d.push_back(0.0);
  return d;
}

}  // namespace

TEST_CASE("q-derivative of powers") {
  for (double q : {0.3, 0.5, 0.8})
    for (int n = 1; n <= 5; ++n)
      for (double x : {0.4, 1.0, 2.5}) {
        const Evaluable f = [n](double t) { return std::pow(t, n); };
        const double ref = static_cast<double>(oracle::bracket_int(n, q)) * std::pow(x, n - 1);
        CHECK(oracle::rel(q_derivative(f, x, at(q)), ref) < 1e-12);
      }
}

TEST_CASE("q-derivative at zero takes the lattice limit") {
  const QContext c = at(0.5);
  const Evaluable f = [](double t) { return 3.0 + 2.0 * t + t * t; };
  CHECK(q_derivative(f, 0.0, c) == doctest::Approx(2.0).epsilon(1e-10));
  const Evaluable e = [&c](double t) { return exp_second(t, c).value; };
  CHECK(q_derivative(e, 0.0, c) == doctest::Approx(1.0).epsilon(1e-9));
  // second q-derivative of t^2 is [2][1]
  const Evaluable sq = [](double t) { return t * t; };
  CHECK(q_derivative_n(sq, 0.0, 2, c) == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(q_derivative_n(sq, 0.7, 0, c) == doctest::Approx(0.49));
}

TEST_CASE("e_q is its own q-derivative") {
  const QContext c = at(0.5);
  const Evaluable e = [&c](double t) { return exp_second(t, c).value; };
  for (double x : {0.1, 0.5, 1.2, 1.9}) CHECK(oracle::rel(q_derivative(e, x, c), e(x)) < 1e-12);
  CHECK_THROWS_AS(q_derivative(e, -0.5, c), DomainError);
}

TEST_CASE("Jackson integral from zero") {
  const QContext c = at(0.5);
  const Evaluable one = [](double) { return 1.0; };
  const Evaluable id = [](double t) { return t; };
  CHECK(jackson_finite(one, 3.0, c).value == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(jackson_finite(id, 1.0, c).value == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  for (double q : {0.3, 0.5, 0.8})
    for (int n = 0; n <= 5; ++n) {
      const Evaluable p = [n](double t) { return std::pow(t, n); };
      CHECK(oracle::rel(jackson_finite(p, 1.0, at(q)).value,
                        1.0 / static_cast<double>(oracle::bracket_int(n + 1, q))) < 1e-14);
    }
}

TEST_CASE("Jackson integral on an interval") {
  const QContext c = at(0.5);
  const Evaluable one = [](double) { return 1.0; };
  const Evaluable id = [](double t) { return t; };
  CHECK(jackson_interval(id, 0.7, 0.7, c).value == 0.0);
  CHECK(jackson_interval(one, 0.25, 1.0, c).value == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(jackson_interval(id, 0.5, 1.0, c).value == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("Jackson integral against a long-double lattice sum") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> qd(0.1, 0.9), xd(0.1, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double q = qd(rng), x = xd(rng);
    const Evaluable f = [](double t) { return std::sin(t) + t * t; };
    const double ref = static_cast<double>(
        oracle::jackson([](oracle::Real t) { return std::sin(t) + t * t; }, x, q));
    CHECK(oracle::rel(jackson_finite(f, x, at(q)).value, ref) < 1e-13);
  }
}

TEST_CASE("improper Jackson integral") {
  const QContext c = at(0.5);
  const Evaluable k1 = [&c](double t) { return exp_second_extended(-t, c); };
  const Evaluable k2 = [&c](double t) { return t * exp_second_extended(-t, c); };
  const SeriesResult r1 = jackson_improper(k1, c);
  CHECK(r1.status == SeriesStatus::Converged);
  CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(jackson_improper(k2, c).value == doctest::Approx(2.0).epsilon(1e-12));
  // a growing integrand is reported, not thrown
  const Evaluable grow = [](double t) { return t; };
  CHECK(jackson_improper(grow, c).status == SeriesStatus::Diverged);
}

TEST_CASE("improper integral is invariant under lattice shifts") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> qd(0.2, 0.8);
  std::uniform_int_distribution<int> nd(-6, 6);
  for (int i = 0; i < 60; ++i) {
    const double q = qd(rng);
    const int n = nd(rng);
    QContext c = at(q);
    c.latticeKMin = -400;
    c.latticeKMax = 400;
    const Evaluable f = [](double t) { return t / ((1 + t) * (1 + t * t)); };
    const double base = jackson_improper(f, c).value;
    const double shifted = jackson_improper(f, c, std::pow(q, n)).value;
    CHECK(oracle::rel(base, shifted) <= 1e-13);
  }
}

TEST_CASE("Leibniz rule") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> qd(0.1, 0.9), xd(0.05, 3.0);
  std::uniform_int_distribution<int> pd(0, 6);
  for (int i = 0; i < 500; ++i) {
    const double q = qd(rng), x = xd(rng);
    const int m = pd(rng), n = pd(rng);
    const QContext c = at(q);
    const Evaluable f = [m](double t) { return std::pow(t, m); };
    const Evaluable g = [n](double t) { return std::pow(t, n); };
    const Evaluable fg = [m, n](double t) { return std::pow(t, m + n); };
    const double lhs = q_derivative(fg, x, c);
    const double rhs = g(x) * q_derivative(f, x, c) + f(q * x) * q_derivative(g, x, c);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::fmax(1.0, std::fabs(lhs)));
  }
}

TEST_CASE("q-integration by parts") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> qd(0.1, 0.9), bd(0.2, 1.0);
  std::uniform_int_distribution<int> dd(0, 4);
  for (int i = 0; i < 300; ++i) {
    const double q = qd(rng), b = i % 2 ? 1.0 : bd(rng);
    const QContext c = at(q);
    const auto pf = random_poly(rng, dd(rng));
    const auto pg = random_poly(rng, dd(rng));
    const auto df = dq_poly(pf, c);
    const auto dg = dq_poly(pg, c);
    const Evaluable left = [&](double x) { return horner(pg, x) * horner(df, x); };
    const Evaluable right = [&](double x) { return horner(pf, q * x) * horner(dg, x); };
    const double lhs = jackson_finite(left, b, c).value;
    const double rhs = horner(pf, b) * horner(pg, b) - horner(pf, 0) * horner(pg, 0) -
                       jackson_finite(right, b, c).value;
    const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("integrals are linear") {
  const QContext c = at(0.6);
  const Evaluable f = [](double t) { return std::exp(-t) * t; };
  const Evaluable g = [](double t) { return 1.0 / (1.0 + t * t * t); };
  const Evaluable h = [&](double t) { return 2.5 * f(t) - 0.75 * g(t); };
  CHECK(oracle::rel(jackson_finite(h, 2.0, c).value,
                    2.5 * jackson_finite(f, 2.0, c).value - 0.75 * jackson_finite(g, 2.0, c).value) <
        1e-13);
  CHECK(oracle::rel(jackson_improper(h, c).value,
                    2.5 * jackson_improper(f, c).value - 0.75 * jackson_improper(g, c).value) <
        1e-13);
}
