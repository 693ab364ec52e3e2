#include <cmath>
#include <cstdio>

#include "cli_internal.hpp"

namespace qnat {

namespace detail {

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const AuditParams& p) {
  Json j{{"q", p.q}, {"u", p.u},         {"v", p.v}, {"a", p.a}, {"alpha", p.alpha},
         {"beta", p.beta}, {"n", p.n}, {"t", p.t}, {"k", p.k}};
  if (!p.coefficients.empty()) j["coefficients"] = p.coefficients;
  return j;
}

Json to_json(const IdentityReport& r) {
  Json j{{"id", r.id},
         {"group", r.group},
         {"verdict", to_string(r.verdict)},
         {"lhs", r.lhs},
         {"rhs", r.rhs},
         {"relErr", r.relErr},
         {"tolerance", r.tolerance},
         {"mode", to_string(r.mode)},
         {"erratumCandidate", r.erratumCandidate},
         {"params", to_json(r.params)}};
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.coefficients.empty()) {
    Json rows = Json::array();
    for (const auto& c : r.coefficients)
      rows.push_back({{"power", c.power}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"relErr", c.relErr}});
    j["coefficients"] = std::move(rows);
  }
  return j;
}

Json to_json(const SweepResult& s) {
  Json reports = Json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  Json tally = Json::object();
  for (const auto& [id, t] : s.tally)
    tally[id] = {{"pass", t.pass}, {"fail", t.fail}, {"diverged", t.diverged}, {"skipped", t.skipped}};
  Json groups = Json::array();
  for (const auto& g : s.groups)
    groups.push_back({{"group", g.group},
                      {"members", g.members},
                      {"wins", g.wins},
                      {"points", g.points},
                      {"exclusive", g.exclusive},
                      {"winner", g.winner()}});
  return {{"reports", std::move(reports)},
          {"tally", std::move(tally)},
          {"groups", std::move(groups)},
          {"exitStatus", s.exitStatus}};
}

Json to_json(const QContext& ctx) {
  return {{"q", ctx.q},
          {"relTol", ctx.relTol},
          {"maxTerms", ctx.maxTerms},
          {"kMin", ctx.latticeKMin},
          {"kMax", ctx.latticeKMax},
          {"anchor", ctx.anchor == LatticeAnchor::Adapted ? "adapted" : "unit"}};
}

}  // namespace detail

std::string csv_header() { return "identityId,q,u,v,extraParams,lhs,rhs,relErr,mode,verdict"; }

std::string csv_row(const IdentityReport& r) {
  using detail::csv_number;
  const AuditParams& p = r.params;
  // Semicolons keep the extra parameters in one column.
  std::string extra = "a=" + csv_number(p.a) + ";alpha=" + csv_number(p.alpha) +
                      ";beta=" + csv_number(p.beta) + ";n=" + std::to_string(p.n) +
                      ";t=" + csv_number(p.t) + ";k=" + csv_number(p.k);
  if (!p.coefficients.empty()) {
    extra += ";coefficients=";
    for (std::size_t i = 0; i < p.coefficients.size(); ++i)
      extra += (i ? "|" : "") + csv_number(p.coefficients[i]);
  }
  return r.id + "," + csv_number(p.q) + "," + csv_number(p.u) + "," + csv_number(p.v) + "," +
         extra + "," + csv_number(r.lhs) + "," + csv_number(r.rhs) + "," + csv_number(r.relErr) +
         "," + to_string(r.mode) + "," + to_string(r.verdict);
}

}  // namespace qnat
