#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

/// Argument outside the domain of a function or closed form.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DomainError"; }
};

/// A series or limit did not settle within the context's term budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "NonConvergence"; }
};

/// Classical transform requested where the integral does not exist.
class DivergentTransform : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DivergentTransform"; }
};

/// Function descriptor outside a closed-form registry.
class UnknownForm : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "UnknownForm"; }
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "UnknownIdentity"; }
};

class InvalidContext : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InvalidContext"; }
};

/// How the bilateral lattice of an improper Jackson integral is placed.
///
/// `Unit` sums over {q^k}. `Adapted` rescales the lattice so that the
/// transform kernel is sampled at its own lattice points (q^k / A); for the
/// first-kind kernel this makes the sum terminate on the left.
enum class LatticeAnchor { Unit, Adapted };

/// Deformation parameter plus every truncation knob.
struct QContext {
  double q = 0.5;
  int latticeKMin = -60;
  int latticeKMax = 200;
  double relTol = 1e-10;
  int maxTerms = 500;
  LatticeAnchor anchor = LatticeAnchor::Adapted;

  /// Throws InvalidContext when an invariant is violated.
  void validate() const;

  QContext withQ(double newQ) const {
    QContext c = *this;
    c.q = newQ;
    return c;
  }

  /// Threshold used to stop summation loops. Loops run to roughly machine
  /// precision; relTol only decides the reported status.
  double stopTol() const { return relTol < 1e-16 ? relTol : 1e-16; }
};

/// Wide defaults suited to audits and q close to 1.
QContext precise_context(double q);

enum class SeriesStatus { Converged, Truncated, Diverged };
enum class EvalMode { Numeric, Formal };

const char* to_string(SeriesStatus s);
const char* to_string(EvalMode m);

/// A numeric value together with its convergence diagnostics.
struct SeriesResult {
  double value = 0.0;
  int termsUsed = 0;
  double tailEstimate = 0.0;
  SeriesStatus status = SeriesStatus::Converged;
  EvalMode mode = EvalMode::Numeric;
  // First and last lattice exponent retained by bilateral sums.
  int firstIndex = 0;
  int lastIndex = 0;

  bool converged() const { return status == SeriesStatus::Converged; }
};

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Status from a tail bound: Converged when tail <= relTol * max(|value|, 1).
SeriesStatus classify_tail(double value, double tail, const QContext& ctx);

}  // namespace qnat
