#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qnat/verify.hpp"

namespace qnat::detail {

/// Both sides of one identity instance.
struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
  // Magnitude of the largest contribution when the sides may cancel to zero.
  double scale = 0.0;
  bool diverged = false;
  std::vector<CoefficientRow> rows;
  std::string note;
};

using Evaluator = std::function<Sides(const AuditParams&, const QContext&)>;
using GridFn = std::function<std::vector<AuditParams>(double q, const std::vector<double>& ratios)>;

struct IdentityEntry {
  IdentityInfo info;
  Evaluator eval;
  GridFn grid;
};

const std::vector<IdentityEntry>& registry_entries();

}  // namespace qnat::detail
