#include "qnat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "verify_internal.hpp"

namespace qnat {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Diverged: return "Diverged";
    case Verdict::DomainSkipped: return "DomainSkipped";
  }
  return "?";
}

namespace {

const detail::IdentityEntry& entry(const std::string& id) {
  for (const auto& e : detail::registry_entries())
    if (e.info.id == id) return e;
  throw UnknownIdentity("unknown identity: " + id);
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : detail::registry_entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const IdentityInfo& identity_info(const std::string& id) { return entry(id).info; }

IdentityReport audit_identity(const std::string& id, const AuditParams& params,
                              const QContext& ctx) {
  const detail::IdentityEntry& e = entry(id);
  IdentityReport rep;
  rep.id = e.info.id;
  rep.group = e.info.group;
  rep.params = params;
  rep.tolerance = e.info.tolerance;
  rep.mode = e.info.mode;
  rep.erratumCandidate = e.info.erratumCandidate;

  const auto nan = std::numeric_limits<double>::quiet_NaN();
  detail::Sides s;
  try {
    const QContext c = ctx.withQ(params.q);
    c.validate();
    s = e.eval(params, c);
  } catch (const NonConvergence& ex) {
    rep.lhs = rep.rhs = rep.relErr = nan;
    rep.verdict = Verdict::Diverged;
    rep.note = std::string(ex.kind()) + ": " + ex.what();
    return rep;
  } catch (const Error& ex) {
    rep.lhs = rep.rhs = rep.relErr = nan;
    rep.verdict = Verdict::DomainSkipped;
    rep.note = std::string(ex.kind()) + ": " + ex.what();
    return rep;
  }
  rep.lhs = s.lhs;
  rep.rhs = s.rhs;
  rep.note = s.note;
  rep.coefficients = s.rows;
  if (s.diverged || !std::isfinite(s.lhs) || !std::isfinite(s.rhs)) {
    rep.relErr = nan;
    rep.verdict = Verdict::Diverged;
    return rep;
  }
  if (!s.rows.empty()) {
    rep.relErr = 0.0;
    for (const auto& row : s.rows) rep.relErr = std::max(rep.relErr, row.relErr);
  } else {
    const double m = std::max({std::abs(s.lhs), std::abs(s.rhs), s.scale});
    rep.relErr = m == 0.0 ? 0.0 : std::abs(s.lhs - s.rhs) / m;
  }
  rep.verdict = rep.relErr <= rep.tolerance ? Verdict::Pass : Verdict::Fail;
  return rep;
}

std::vector<AuditParams> identity_grid(const std::string& id, double q,
                                       const std::vector<double>& ratios) {
  return entry(id).grid(q, ratios);
}

std::string GroupOutcome::winner() const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (points > 0 && wins[i] == points) return members[i];
  return "none";
}

SweepResult audit_sweep(const SweepConfig& config) {
  SweepResult out;
  std::map<std::string, std::vector<std::string>> groupMembers;
  std::vector<std::string> groupOrder;
  for (const auto& e : detail::registry_entries()) {
    const std::string& id = e.info.id;
    if (!config.identities.empty() &&
        std::find(config.identities.begin(), config.identities.end(), id) ==
            config.identities.end())
      continue;
    auto& members = groupMembers[e.info.group];
    if (members.empty()) groupOrder.push_back(e.info.group);
    members.push_back(id);
    IdentityTally& t = out.tally[id];
    for (double q : config.qs) {
      for (const AuditParams& p : e.grid(q, config.ratios)) {
        IdentityReport r = audit_identity(id, p, config.ctx);
        switch (r.verdict) {
          case Verdict::Pass: ++t.pass; break;
          case Verdict::Fail:
            ++t.fail;
            if (!r.erratumCandidate) out.exitStatus = 1;
            break;
          case Verdict::Diverged: ++t.diverged; break;
          case Verdict::DomainSkipped: ++t.skipped; break;
        }
        out.reports.push_back(std::move(r));
      }
    }
  }

  for (const std::string& group : groupOrder) {
    const auto& members = groupMembers[group];
    if (members.size() < 2) continue;
    GroupOutcome g;
    g.group = group;
    g.members = members;
    g.wins.assign(members.size(), 0);
    std::vector<std::vector<const IdentityReport*>> rows(members.size());
    for (const auto& r : out.reports)
      for (std::size_t i = 0; i < members.size(); ++i)
        if (r.id == members[i]) rows[i].push_back(&r);
    g.points = static_cast<int>(rows.front().size());
    for (const auto& rr : rows) g.points = std::min(g.points, static_cast<int>(rr.size()));
    for (int k = 0; k < g.points; ++k) {
      int passing = 0;
      std::size_t who = 0;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (rows[i][k]->verdict == Verdict::Pass) {
          ++passing;
          who = i;
        }
      if (passing == 1) {
        ++g.exclusive;
        ++g.wins[who];
      }
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

LimitStudy q_limit_study(const FunctionSpec& f, TransformPoint pt, const std::vector<double>& qs,
                         TransformKind kind) {
  if (qs.empty()) throw DomainError("q_limit_study: empty q list");
  for (std::size_t i = 1; i < qs.size(); ++i)
    if (!(qs[i] > qs[i - 1])) throw DomainError("q_limit_study: q list must increase strictly");
  LimitStudy study;
  for (double q : qs) {
    const QContext ctx = precise_context(q);
    LimitRow row;
    row.q = q;
    row.qValue = nq(kind, f, pt, ctx, StrategyChoice::termwise()).value;
    row.classical = natural_classical(f, pt, ctx);
    row.gap = std::abs(row.qValue - row.classical);
    study.rows.push_back(row);
  }
  study.monotone = true;
  for (std::size_t i = 1; i < study.rows.size(); ++i) {
    const LimitRow& a = study.rows[i - 1];
    const LimitRow& b = study.rows[i];
    const double floorA = 1e-10 * std::abs(a.classical);
    const double floorB = 1e-10 * std::abs(b.classical);
    const bool bothNoise = a.gap <= floorA && b.gap <= floorB;
    if (!(b.gap < a.gap) && !bothNoise) study.monotone = false;
  }
  return study;
}

}  // namespace qnat
