#pragma once

#include <json.hpp>
#include "qnat/cli.hpp"

namespace qnat::detail {

using Json = nlohmann::ordered_json;

Json to_json(const AuditParams& p);
Json to_json(const IdentityReport& r);
Json to_json(const SweepResult& s);
Json to_json(const QContext& ctx);

// %.17g; non-finite values as nan/inf.
std::string csv_number(double x);

}  // namespace qnat::detail
