#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
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
}  // namespace

TEST_CASE("small q-exponential against its series") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> qd(0.1, 0.9), fr(-0.95, 0.95);
  for (int i = 0; i < 200; ++i) {
    const double q = qd(rng);
    const double x = fr(rng) / (1 - q);
    CHECK(oracle::rel(exp_second(x, at(q)).value, oracle::exp_small(x, q)) < 1e-12);
  }
  CHECK_THROWS_AS(exp_second(2.0, at(0.5)), DomainError);
  CHECK_THROWS_AS(exp_second(-2.0, at(0.5)), DomainError);
}

TEST_CASE("big q-exponential against its series") {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> qd(0.1, 0.9), xd(-1.5, 4.0);
  for (int i = 0; i < 200; ++i) {
    const double q = qd(rng), x = xd(rng);
    const double ref = oracle::exp_big(x, q);
    CHECK(std::fabs(exp_first(x, at(q)).value - ref) <= 1e-12 * std::fmax(1.0, std::fabs(ref)));
  }
}

TEST_CASE("E_q is a product and vanishes at -q^{-m}/(1-q)") {
  const double q = 0.5;
  for (double x : {-5.0, -1.0, 0.3, 7.0})
    CHECK(oracle::rel(exp_first(x, at(q)).value, oracle::poch_inf(-(1 - q) * x, q)) < 1e-12);
  for (int m = 0; m < 6; ++m)
    CHECK(std::fabs(exp_first(-std::pow(q, -m) / (1 - q), at(q)).value) < 1e-14);
}

TEST_CASE("e_q(x) E_q(-x) = 1") {
  for (double q : {0.3, 0.5, 0.8})
    for (double x : {-1.0, 0.2, 0.9, 1.5}) {
      if (std::fabs(x) * (1 - q) >= 1) continue;
      CHECK(exp_second(x, at(q)).value * exp_first(-x, at(q)).value ==
            doctest::Approx(1.0).epsilon(1e-13));
    }
  // extension beyond the radius for negative arguments
  CHECK(exp_second_extended(-10.0, at(0.5)) * exp_first(10.0, at(0.5)).value ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("q-trig against the defining series") {
  for (double q : {0.3, 0.5, 0.8})
    for (double x : {-1.2, 0.1, 0.7, 1.9}) {
      auto one = [](int) { return oracle::Real(1); };
      if (std::fabs(x) * (1 - q) < 1) {
        CHECK(oracle::rel(q_trig(TrigKind::SinSecond, x, 1.0, at(q)).value,
                          oracle::trig(true, x, q, one)) < 1e-12);
        CHECK(oracle::rel(q_trig(TrigKind::CosSecond, 1.0, x, at(q)).value,
                          oracle::trig(false, x, q, one)) < 1e-12);
      }
      auto ws = [q](int n) { return std::pow(oracle::Real(q), n * (n + 1) / 2); };
      auto wc = [q](int n) { return std::pow(oracle::Real(q), n * (n - 1) / 2); };
      CHECK(oracle::rel(q_trig(TrigKind::SinFirst, x, 1.0, at(q)).value,
                        oracle::trig(true, x, q, ws)) < 1e-12);
      CHECK(oracle::rel(q_trig(TrigKind::CosFirst, x, 1.0, at(q)).value,
                        oracle::trig(false, x, q, wc)) < 1e-12);
    }
  CHECK_THROWS_AS(q_trig(TrigKind::SinSecond, 3.0, 1.0, at(0.5)), DomainError);
}

TEST_CASE("second-kind hyperbolics") {
  const QContext c = at(0.5);
  const double x = 0.8;
  const double cosh = q_hyperbolic(HyperbolicKind::CoshSecond, x, c).value;
  const double sinh = q_hyperbolic(HyperbolicKind::SinhSecond, x, c).value;
  CHECK(cosh + sinh == doctest::Approx(static_cast<double>(oracle::exp_small(x, 0.5))));
  CHECK(cosh - sinh == doctest::Approx(static_cast<double>(oracle::exp_small(-x, 0.5))));
}

TEST_CASE("first-kind gamma against the product formula") {
  for (double q : {0.2, 0.5, 0.8, 0.95})
    for (double t : {0.3, 0.5, 1.0, 1.5, 2.7, 4.0, 6.2}) {
      const SeriesResult g = gamma_first(t, at(q));
      CHECK(g.status == SeriesStatus::Converged);
      CHECK(oracle::rel(g.value, oracle::gamma_q(t, q)) < 1e-12);
    }
}

TEST_CASE("first-kind gamma at integers is the q-factorial") {
  for (double q : {0.3, 0.5, 0.8})
    for (int n = 0; n <= 6; ++n)
      CHECK(oracle::rel(gamma_first(n + 1, at(q)).value, oracle::factorial(n, q)) < 1e-12);
  CHECK_THROWS_AS(gamma_first(0.0, at(0.5)), DomainError);
}

TEST_CASE("first-kind gamma close to q = 1") {
  const QContext c = precise_context(0.999);
  CHECK(oracle::rel(gamma_first(3.0, c).value, oracle::factorial(2, 0.999)) < 1e-12);
}

TEST_CASE("second-kind gamma") {
  for (double q : {0.3, 0.5, 0.8}) {
    const QContext c = precise_context(q);
    CHECK(gamma_second(1.0, c).value == doctest::Approx(1.0).epsilon(1e-12));
    for (int n = 2; n <= 4; ++n)
      CHECK(oracle::rel(gamma_second(n, c).value, oracle::gamma_second_int(n, q)) < 1e-9);
    for (double t : {0.5, 1.5, 2.5}) {
      const double lhs = gamma_second(t + 1, c).value;
      const double rhs = std::pow(q, -t) * q_bracket(t, c) * gamma_second(t, c).value;
      CHECK(oracle::rel(lhs, rhs) < 1e-9);
    }
  }
  CHECK_THROWS_AS(gamma_second(-1.0, at(0.5)), DomainError);
}

TEST_CASE("q-beta") {
  for (double q : {0.3, 0.5, 0.8})
    for (double t : {0.5, 1.0, 2.0})
      for (double s : {0.5, 1.0, 2.5}) {
        const double ref =
            static_cast<double>(oracle::gamma_q(t, q) * oracle::gamma_q(s, q) / oracle::gamma_q(s + t, q));
        CHECK(oracle::rel(beta_q(t, s, at(q)).value, ref) < 1e-11);
      }
  CHECK_THROWS_AS(beta_q(1.0, 0.0, at(0.5)), DomainError);
}
