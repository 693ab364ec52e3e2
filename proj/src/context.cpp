#include "qnat/context.hpp"

#include <algorithm>
#include <cmath>

namespace qnat {

void QContext::validate() const {
  if (!(q > 0.0 && q < 1.0)) throw InvalidContext("q must lie in (0, 1)");
  if (!(latticeKMin < 0 && latticeKMax > 0))
    throw InvalidContext("lattice window must satisfy kMin < 0 < kMax");
  if (!(relTol > 0.0)) throw InvalidContext("relTol must be positive");
  if (maxTerms < 1) throw InvalidContext("maxTerms must be at least 1");
}

QContext precise_context(double q) {
  QContext c;
  c.q = q;
  c.relTol = 1e-14;
  c.maxTerms = 400000;
  // Wide enough that q^k spans roughly 1e-40 .. 1e+40 on either side.
  const double perDecade = std::log(10.0) / -std::log(q);
  c.latticeKMax = std::max(200, static_cast<int>(std::ceil(40.0 * perDecade)));
  c.latticeKMin = -std::max(60, static_cast<int>(std::ceil(40.0 * perDecade)));
  return c;
}

const char* to_string(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::Converged: return "Converged";
    case SeriesStatus::Truncated: return "Truncated";
    case SeriesStatus::Diverged: return "Diverged";
  }
  return "?";
}

const char* to_string(EvalMode m) {
  return m == EvalMode::Numeric ? "Numeric" : "Formal";
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

SeriesStatus classify_tail(double value, double tail, const QContext& ctx) {
  if (!std::isfinite(value) || !std::isfinite(tail)) return SeriesStatus::Diverged;
  return tail <= ctx.relTol * std::max(std::abs(value), 1.0) ? SeriesStatus::Converged
                                                              : SeriesStatus::Truncated;
}

}  // namespace qnat
