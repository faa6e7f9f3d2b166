#pragma once

#include <json.hpp>

#include "cuntzcf/cfe.hpp"
#include "cuntzcf/report.hpp"
#include "cuntzcf/surd.hpp"

namespace cuntzcf {

/// {"a": "-1", "b": "1", "c": "2", "d": "5"}, integers as decimal strings.
nlohmann::json surd_to_json(const QuadraticSurd& x);
/// Accepts decimal strings or JSON integers. Throws ParseError.
QuadraticSurd surd_from_json(const nlohmann::json& j);

/// {"initial": [...], "period": [...]}
nlohmann::json block_to_json(const PeriodicCFE& e);
PeriodicCFE block_from_json(const nlohmann::json& j);

/// [{"check", "instance", "verdict", "residual"}, ...]
nlohmann::json report_to_json(const Report& r);

}  // namespace cuntzcf
