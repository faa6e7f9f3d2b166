#include "cuntzcf/serialize.hpp"

#include "cuntzcf/errors.hpp"

namespace cuntzcf {

namespace {

BigInt field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  if (v.is_number_integer()) return parse_bigint(v.dump());
  throw ParseError(std::string("field '") + key + "' must be an integer or decimal string");
}

Word letters(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(std::string("missing array '") + key + "'");
  }
  Word out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_unsigned() || v.get<Letter>() < 1) throw ParseError("block entries must be positive integers");
    out.push_back(v.get<Letter>());
  }
  return out;
}

}  // namespace

nlohmann::json surd_to_json(const QuadraticSurd& x) {
  return {{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"c", to_string(x.c())}, {"d", to_string(x.d())}};
}

QuadraticSurd surd_from_json(const nlohmann::json& j) {
  return QuadraticSurd::normalize(field(j, "a"), field(j, "b"), field(j, "c"), field(j, "d"));
}

nlohmann::json block_to_json(const PeriodicCFE& e) { return {{"initial", e.initial()}, {"period", e.period()}}; }

PeriodicCFE block_from_json(const nlohmann::json& j) {
  Word period = letters(j, "period");
  if (period.empty()) throw ParseError("period must be nonempty");
  return PeriodicCFE::make(letters(j, "initial"), std::move(period));
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& rec : r.records) {
    out.push_back({{"check", rec.check}, {"instance", rec.instance}, {"verdict", rec.verdict}, {"residual", rec.residual}});
  }
  return out;
}

}  // namespace cuntzcf
