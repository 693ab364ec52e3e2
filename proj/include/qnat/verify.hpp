#pragma once

// Identity audits: both sides of each stated result computed along
// independent paths and compared.

#include <map>
#include <string>
#include <vector>

#include "qnat/context.hpp"
#include "qnat/function_spec.hpp"
#include "qnat/transforms.hpp"

namespace qnat {

enum class Verdict { Pass, Fail, Diverged, DomainSkipped };

const char* to_string(Verdict v);

/// Parameters of one audited instance. Fields an identity does not use are
/// ignored. `alpha` doubles as the monomial exponent, `n` as a derivative
/// order, formal order or integer argument, `t` as a pointwise argument and
/// `k` as a scaling factor.
struct AuditParams {
  double q = 0.5;
  double u = 1.0;
  double v = 1.0;
  double a = 0.0;
  double alpha = 0.0;
  double beta = 1.0;
  int n = 1;
  double t = 1.0;
  double k = 1.0;
  std::vector<double> coefficients;  // power-series inputs
};

/// One row of a formal coefficient comparison.
struct CoefficientRow {
  int power = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double relErr = 0.0;
};

struct IdentityReport {
  std::string id;
  std::string group;
  AuditParams params;
  double lhs = 0.0;
  double rhs = 0.0;
  double relErr = 0.0;
  double tolerance = 0.0;
  EvalMode mode = EvalMode::Numeric;
  Verdict verdict = Verdict::Fail;
  bool erratumCandidate = false;
  std::string note;
  std::vector<CoefficientRow> coefficients;  // Formal mode only
};

/// Static description of a registered identity.
struct IdentityInfo {
  std::string id;
  std::string group;        // shared by the members of a printed/derived pair
  std::string description;
  double tolerance = 1e-8;
  EvalMode mode = EvalMode::Numeric;
  bool erratumCandidate = false;
};

/// Every registered identity, in sweep order.
const std::vector<IdentityInfo>& identity_registry();

/// Throws UnknownIdentity for an unregistered id.
const IdentityInfo& identity_info(const std::string& id);

/// Evaluates one identity. `ctx` supplies the truncation policy; its q is
/// replaced by params.q. Domain violations and non-convergence become
/// DomainSkipped and Diverged verdicts; only an unknown id throws.
IdentityReport audit_identity(const std::string& id, const AuditParams& params,
                              const QContext& ctx);

/// Default parameter grid of an identity at one q. `ratios` are the a u / v
/// values used by the geometric identities.
std::vector<AuditParams> identity_grid(const std::string& id, double q,
                                       const std::vector<double>& ratios);

struct SweepConfig {
  std::vector<double> qs{0.3, 0.5, 0.8};
  std::vector<double> ratios{0.2, 0.5, 0.8};
  std::vector<std::string> identities;  // empty: all
  QContext ctx;
};

struct IdentityTally {
  int pass = 0;
  int fail = 0;
  int diverged = 0;
  int skipped = 0;
};

/// Outcome of a group of competing variants (a printed/derived pair or an
/// argument-ordering probe) over their shared grid.
struct GroupOutcome {
  std::string group;
  std::vector<std::string> members;
  std::vector<int> wins;  // points where this member alone passes
  int points = 0;
  int exclusive = 0;  // points where exactly one member passes

  bool exclusiveEverywhere() const { return points > 0 && exclusive == points; }
  /// The member that alone passes at every point, or "none".
  std::string winner() const;
};

struct SweepResult {
  std::vector<IdentityReport> reports;
  std::map<std::string, IdentityTally> tally;
  std::vector<GroupOutcome> groups;
  /// 0 iff no Fail among identities that are not erratum candidates.
  int exitStatus = 0;
};

SweepResult audit_sweep(const SweepConfig& config);

/// One row of a q -> 1 study.
struct LimitRow {
  double q = 0.0;
  double qValue = 0.0;
  double classical = 0.0;
  double gap = 0.0;
};

struct LimitStudy {
  std::vector<LimitRow> rows;
  /// Gaps strictly decrease, or every gap is below the noise floor
  /// 1e-10 * |classical| (both transforms agree identically).
  bool monotone = false;
};

/// First-kind transform (termwise) against the classical transform of the
/// q -> 1 limit of f for each q, using a precise context per q.
LimitStudy q_limit_study(const FunctionSpec& f, TransformPoint pt, const std::vector<double>& qs,
                         TransformKind kind = TransformKind::First);

}  // namespace qnat
