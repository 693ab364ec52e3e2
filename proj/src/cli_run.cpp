#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "cli_internal.hpp"

namespace qnat {

namespace {

using detail::Json;
using detail::csv_number;

struct Options {
  std::string kind = "first";
  std::string f;
  double q = 0.5;
  double u = 1.0;
  double v = 1.0;
  std::string strategy;  // empty: default for the kind
  int order = 8;
  double relTol = 1e-10;
  int maxTerms = 500;
  int kMin = -60;
  int kMax = 200;
  std::string anchor = "adapted";
  std::string format = "json";
  std::string variant = "printed";
  // audit / sweep / limit / table
  std::string id;
  std::vector<std::string> ids;
  std::string suite = "default";
  std::vector<double> qs;
  std::vector<double> ratios{0.2, 0.5, 0.8};
  AuditParams audit;
  double ratio = 0.5;
};

void add_context(CLI::App* app, Options& o) {
  app->add_option("--rel-tol", o.relTol, "relative tolerance for the reported status");
  app->add_option("--max-terms", o.maxTerms, "term budget for series");
  app->add_option("--kmin", o.kMin, "lowest lattice exponent");
  app->add_option("--kmax", o.kMax, "highest lattice exponent");
  app->add_option("--anchor", o.anchor, "lattice anchor")->check(CLI::IsMember({"adapted", "unit"}));
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_point(CLI::App* app, Options& o) {
  app->add_option("--u", o.u, "first transform argument");
  app->add_option("--v", o.v, "second transform argument");
}

void add_kind(CLI::App* app, Options& o) {
  app->add_option("--kind", o.kind, "transform kind")->check(CLI::IsMember({"first", "second"}));
}

QContext context(const Options& o, double q) {
  QContext ctx;
  ctx.q = q;
  ctx.relTol = o.relTol;
  ctx.maxTerms = o.maxTerms;
  ctx.latticeKMin = o.kMin;
  ctx.latticeKMax = o.kMax;
  ctx.anchor = o.anchor == "unit" ? LatticeAnchor::Unit : LatticeAnchor::Adapted;
  ctx.validate();
  return ctx;
}

TransformKind kind_of(const Options& o) {
  return o.kind == "second" ? TransformKind::Second : TransformKind::First;
}

StrategyChoice strategy_of(const Options& o, TransformKind kind) {
  if (o.strategy.empty()) return default_strategy(kind);
  if (o.strategy == "direct") return StrategyChoice::direct();
  if (o.strategy == "termwise") return StrategyChoice::termwise();
  if (o.order < 0) throw InvalidContext("--order must be nonnegative");
  return StrategyChoice::formal(o.order);
}

TransformPoint point_of(const Options& o) {
  TransformPoint pt{o.u, o.v};
  pt.validate();
  return pt;
}

FunctionSpec function_of(const Options& o) {
  if (o.f.empty()) throw InvalidContext("--f is required");
  return parse_function(o.f);
}

Json point_params(const Options& o, const QContext& ctx, const FunctionSpec& f) {
  Json p = detail::to_json(ctx);
  p["kind"] = o.kind;
  p["f"] = format_function(f);
  p["u"] = o.u;
  p["v"] = o.v;
  return p;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const QContext ctx = context(o, o.q);
  const TransformKind kind = kind_of(o);
  const StrategyChoice strategy = strategy_of(o, kind);
  const TransformPoint pt = point_of(o);
  const FunctionSpec f = function_of(o);
  const SeriesResult r = nq(kind, f, pt, ctx, strategy);
  if (o.format == "csv") {
    out << "value,status,termsUsed,tailEstimate,strategy,mode,kind,q,u,v\n"
        << csv_number(r.value) << ',' << to_string(r.status) << ',' << r.termsUsed << ','
        << csv_number(r.tailEstimate) << ',' << to_string(strategy.kind) << ','
        << to_string(r.mode) << ',' << o.kind << ',' << csv_number(ctx.q) << ','
        << csv_number(pt.u) << ',' << csv_number(pt.v) << '\n';
    return 0;
  }
  Json params = point_params(o, ctx, f);
  if (strategy.kind == StrategyKind::Formal) params["order"] = strategy.order;
  Json j{{"value", r.value},
         {"status", to_string(r.status)},
         {"termsUsed", r.termsUsed},
         {"tailEstimate", r.tailEstimate},
         {"strategy", to_string(strategy.kind)},
         {"mode", to_string(r.mode)},
         {"firstIndex", r.firstIndex},
         {"lastIndex", r.lastIndex},
         {"params", std::move(params)}};
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_closed(const Options& o, std::ostream& out) {
  const QContext ctx = context(o, o.q);
  const TransformKind kind = kind_of(o);
  const TransformPoint pt = point_of(o);
  const FunctionSpec f = function_of(o);
  const ClosedVariant variant = o.variant == "derived" ? ClosedVariant::Derived : ClosedVariant::Printed;
  const double value = nq_closed(kind, f, pt, ctx, variant);
  Json variants = Json::object();
  if (has_closed_variants(kind, f)) {
    variants["printed"] = nq_closed(kind, f, pt, ctx, ClosedVariant::Printed);
    variants["derived"] = nq_closed(kind, f, pt, ctx, ClosedVariant::Derived);
  }
  if (o.format == "csv") {
    out << "value,variant,kind,f,q,u,v\n"
        << csv_number(value) << ',' << o.variant << ',' << o.kind << ",\"" << format_function(f)
        << "\"," << csv_number(ctx.q) << ',' << csv_number(pt.u) << ',' << csv_number(pt.v) << '\n';
    return 0;
  }
  Json params = point_params(o, ctx, f);
  params["variant"] = o.variant;
  Json j{{"value", value},   {"status", "Converged"}, {"termsUsed", 0},
         {"tailEstimate", 0.0}, {"strategy", "Closed"},  {"params", std::move(params)}};
  if (!variants.empty()) j["variants"] = std::move(variants);
  out << j.dump(2) << '\n';
  return 0;
}

bool counts_as_failure(const IdentityReport& r) {
  return r.verdict == Verdict::Fail && !r.erratumCandidate;
}

void emit_reports(const std::vector<IdentityReport>& reports, const Options& o, std::ostream& out) {
  if (o.format == "csv") {
    out << csv_header() << '\n';
    for (const auto& r : reports) out << csv_row(r) << '\n';
    return;
  }
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(detail::to_json(r));
  out << (arr.size() == 1 ? arr.front() : arr).dump(2) << '\n';
}

int cmd_audit(const Options& o, bool explicitPoint, std::ostream& out) {
  if (o.id.empty()) throw InvalidContext("--id is required");
  identity_info(o.id);
  const QContext ctx = context(o, o.q);
  std::vector<AuditParams> points;
  if (explicitPoint) {
    AuditParams p = o.audit;
    p.q = o.q;
    p.u = o.u;
    p.v = o.v;
    points.push_back(p);
  } else {
    points = identity_grid(o.id, o.q, o.ratios);
  }
  std::vector<IdentityReport> reports;
  int status = 0;
  for (const auto& p : points) {
    reports.push_back(audit_identity(o.id, p, ctx));
    if (counts_as_failure(reports.back())) status = 1;
  }
  emit_reports(reports, o, out);
  return status;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.suite != "default") throw InvalidContext("unknown suite '" + o.suite + "'");
  SweepConfig cfg;
  if (!o.qs.empty()) cfg.qs = o.qs;
  cfg.ratios = o.ratios;
  cfg.identities = o.ids;
  for (const auto& id : cfg.identities) identity_info(id);
  for (double q : cfg.qs) context(o, q);
  cfg.ctx = context(o, cfg.qs.empty() ? o.q : cfg.qs.front());
  const SweepResult s = audit_sweep(cfg);
  if (o.format == "csv") {
    emit_reports(s.reports, o, out);
  } else {
    Json j = detail::to_json(s);
    j["suite"] = o.suite;
    out << j.dump(2) << '\n';
  }
  return s.exitStatus;
}

int cmd_limit(const Options& o, std::ostream& out) {
  const std::vector<double> qs = o.qs.empty() ? std::vector<double>{0.9, 0.99, 0.999} : o.qs;
  for (double q : qs) context(o, q);
  const TransformPoint pt = point_of(o);
  const FunctionSpec f = function_of(o);
  const LimitStudy study = q_limit_study(f, pt, qs, kind_of(o));
  if (o.format == "csv") {
    out << "q,qValue,classical,gap\n";
    for (const auto& r : study.rows)
      out << csv_number(r.q) << ',' << csv_number(r.qValue) << ',' << csv_number(r.classical)
          << ',' << csv_number(r.gap) << '\n';
    return 0;
  }
  Json rows = Json::array();
  for (const auto& r : study.rows)
    rows.push_back({{"q", r.q}, {"qValue", r.qValue}, {"classical", r.classical}, {"gap", r.gap}});
  Json j{{"rows", std::move(rows)},
         {"monotone", study.monotone},
         {"params", {{"kind", o.kind}, {"f", format_function(f)}, {"u", pt.u}, {"v", pt.v}}}};
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace
}  // namespace qnat

namespace qnat {

namespace {

struct TableEntry {
  std::string kind;  // first, second or classical
  FunctionSpec f;
  std::function<double(TransformPoint)> known;  // classical rows only
};

std::vector<TableEntry> known_values(double a) {
  std::vector<TableEntry> rows{
      {"classical", FunctionSpec::constant(1.0), [](TransformPoint p) { return 1.0 / p.v; }},
      {"classical", FunctionSpec::exp_classical(a),
       [a](TransformPoint p) { return 1.0 / (p.v - a * p.u); }}};
  for (int n = 0; n <= 3; ++n) rows.push_back({"first", FunctionSpec::monomial(n), {}});
  for (auto make : {FunctionSpec::exp_second, FunctionSpec::exp_first, FunctionSpec::cosh_second,
                    FunctionSpec::sinh_second, FunctionSpec::cos_second, FunctionSpec::sin_second})
    rows.push_back({"first", make(a), {}});
  rows.push_back({"first", FunctionSpec::heaviside(a), {}});
  for (int n = 0; n <= 3; ++n) rows.push_back({"second", FunctionSpec::monomial(n), {}});
  return rows;
}

Json table_row(const TableEntry& e, TransformPoint pt, const QContext& ctx) {
  Json row{{"kind", e.kind}, {"f", format_function(e.f)}};
  auto attempt = [&](const char* key, auto&& compute) {
    try {
      row[key] = compute();
    } catch (const Error& err) {
      row[key] = nullptr;
      row[std::string(key) + "Error"] = err.kind();
    }
  };
  if (e.kind == "classical") {
    row["closed"] = e.known(pt);
    attempt("numeric", [&] { return natural_classical(e.f, pt, ctx); });
    return row;
  }
  const TransformKind kind = e.kind == "second" ? TransformKind::Second : TransformKind::First;
  attempt("closed", [&] { return nq_closed(kind, e.f, pt, ctx, ClosedVariant::Printed); });
  if (has_closed_variants(kind, e.f))
    attempt("derived", [&] { return nq_closed(kind, e.f, pt, ctx, ClosedVariant::Derived); });
  attempt("numeric", [&] {
    try {
      return nq(kind, e.f, pt, ctx, default_strategy(kind)).value;
    } catch (const DomainError&) {
      return nq(kind, e.f, pt, ctx, StrategyChoice::direct()).value;
    }
  });
  return row;
}

int cmd_table(const Options& o, std::ostream& out) {
  const QContext ctx = context(o, o.q);
  const TransformPoint pt = point_of(o);
  if (!(o.ratio > 0.0 && o.ratio < 1.0)) throw DomainError("--ratio must lie in (0, 1)");
  const double a = o.ratio * pt.v / pt.u;
  Json rows = Json::array();
  for (const auto& e : known_values(a)) rows.push_back(table_row(e, pt, ctx));
  if (o.format == "csv") {
    auto cell = [](const Json& row, const char* key) {
      return row.contains(key) && row[key].is_number() ? csv_number(row[key].get<double>())
                                                       : std::string();
    };
    out << "kind,f,closed,derived,numeric\n";
    for (const auto& r : rows)
      out << r["kind"].get<std::string>() << ",\"" << r["f"].get<std::string>() << "\","
          << cell(r, "closed") << ',' << cell(r, "derived") << ',' << cell(r, "numeric") << '\n';
    return 0;
  }
  Json j{{"rows", std::move(rows)},
         {"params", {{"q", ctx.q}, {"u", pt.u}, {"v", pt.v}, {"a", a}}}};
  out << j.dump(2) << '\n';
  return 0;
}

void emit_error(std::ostream& out, const char* kind, const std::string& message, Json extra = {}) {
  Json e{{"kind", kind}, {"message", message}};
  if (extra.is_object()) e.update(extra);
  out << Json{{"error", std::move(e)}}.dump(2) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"q-Natural transform evaluator and identity auditor", "qnat"};
  app.require_subcommand(1, 1);

  auto* eval = app.add_subcommand("eval", "numeric transform of a function");
  auto* closed = app.add_subcommand("closed", "closed-form transform value");
  auto* audit = app.add_subcommand("audit", "audit one identity");
  auto* sweep = app.add_subcommand("sweep", "audit the identity suite over a grid");
  auto* limit = app.add_subcommand("limit", "q -> 1 gap against the classical transform");
  auto* table = app.add_subcommand("table", "known-values table at one point");

  for (auto* sc : {eval, closed, limit}) {
    add_kind(sc, o);
    sc->add_option("--f", o.f, "function expression")->required();
  }
  for (auto* sc : {eval, closed, audit, table}) sc->add_option("--q", o.q, "deformation parameter");
  for (auto* sc : {eval, closed, limit, table}) add_point(sc, o);
  for (auto* sc : {eval, closed, audit, sweep, limit, table}) {
    add_context(sc, o);
    add_format(sc, o);
  }
  eval->add_option("--strategy", o.strategy, "summation strategy")
      ->check(CLI::IsMember({"direct", "termwise", "formal"}));
  eval->add_option("--order", o.order, "truncation order of the formal strategy");
  closed->add_option("--variant", o.variant, "closed-form variant")
      ->check(CLI::IsMember({"printed", "derived"}));

  audit->add_option("--id", o.id, "identity identifier")->required();
  std::vector<CLI::Option*> pointOpts{
      audit->add_option("--u", o.u, "first transform argument"),
      audit->add_option("--v", o.v, "second transform argument"),
      audit->add_option("--a", o.audit.a, "frequency or shift"),
      audit->add_option("--alpha", o.audit.alpha, "exponent"),
      audit->add_option("--beta", o.audit.beta, "second convolution exponent"),
      audit->add_option("--n", o.audit.n, "order or integer argument"),
      audit->add_option("--t", o.audit.t, "pointwise argument"),
      audit->add_option("--k", o.audit.k, "scaling factor"),
      audit->add_option("--coefficients", o.audit.coefficients, "power-series coefficients")
          ->delimiter(',')};
  for (auto* sc : {audit, sweep})
    sc->add_option("--ratios", o.ratios, "grid ratios")->delimiter(',');

  sweep->add_option("--suite", o.suite, "suite name");
  sweep->add_option("--q", o.qs, "deformation parameters")->delimiter(',');
  sweep->add_option("--id", o.ids, "restrict to these identities")->delimiter(',');
  limit->add_option("--q", o.qs, "deformation parameters")->delimiter(',');

  table->add_option("--ratio", o.ratio, "frequency as a fraction of v/u");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(out, "UsageError", e.what());
    return 2;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*closed) return cmd_closed(o, out);
    if (*audit) {
      bool explicitPoint = false;
      for (auto* opt : pointOpts) explicitPoint = explicitPoint || opt->count() > 0;
      return cmd_audit(o, explicitPoint, out);
    }
    if (*sweep) return cmd_sweep(o, out);
    if (*limit) return cmd_limit(o, out);
    return cmd_table(o, out);
  } catch (const ParseError& e) {
    emit_error(out, e.kind(), e.what(),
               Json{{"position", e.position()}, {"expected", e.expected()}});
  } catch (const Error& e) {
    emit_error(out, e.kind(), e.what());
  } catch (const std::exception& e) {
    emit_error(out, "InternalError", e.what());
  }
  err << "qnat: command failed\n";
  return 2;
}

}  // namespace qnat
