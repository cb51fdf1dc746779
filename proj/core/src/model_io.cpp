#include "blw/model_io.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace blw {

namespace {

using nlohmann::json;

std::int64_t require_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("model: ") + what + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

LBMStructure load_model(const std::string& json_text) {
  const json doc = json::parse(json_text);
  if (!doc.is_object()) throw std::invalid_argument("model: document must be an object");
  if (!doc.contains("worlds") || !doc.contains("denominator") || !doc.contains("valuation"))
    throw std::invalid_argument("model: requires worlds, denominator and valuation");

  const std::int64_t worlds = require_int(doc["worlds"], "worlds");
  const std::int64_t den = require_int(doc["denominator"], "denominator");
  if (worlds < 1) throw std::invalid_argument("model: worlds must be at least 1");
  if (den < 1) throw std::invalid_argument("model: denominator must be at least 1");

  const json& valuation = doc["valuation"];
  if (!valuation.is_object())
    throw std::invalid_argument("model: valuation must be an object");

  LBMStructure::Valuation out;
  for (const auto& [atom, entries] : valuation.items()) {
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(worlds))
      throw std::invalid_argument("model: valuation of \"" + atom + "\" must list " +
                                  std::to_string(worlds) + " numerators");
    std::vector<MVValue> values;
    values.reserve(entries.size());
    for (const json& e : entries) {
      const std::int64_t num = require_int(e, "valuation entry");
      if (num < 0 || num > den)
        throw std::invalid_argument("model: numerator out of [0, denominator] for \"" +
                                    atom + "\"");
      values.emplace_back(num, den);
    }
    if (!slope_check(values))
      throw std::invalid_argument("model: valuation of \"" + atom +
                                  "\" violates the sloping condition");
    out.emplace(atom, SlopingFunction(std::move(values)));
  }
  return LBMStructure(static_cast<std::size_t>(worlds), std::move(out));
}

std::string save_model(const LBMStructure& m, std::optional<std::size_t> world) {
  std::int64_t den = 1;
  for (const auto& [atom, f] : m.valuation())
    for (const MVValue& v : f.values()) den = std::lcm(den, v.den());

  json valuation = json::object();
  for (const auto& [atom, f] : m.valuation()) {
    json entries = json::array();
    for (const MVValue& v : f.values()) entries.push_back(v.num() * (den / v.den()));
    valuation[atom] = std::move(entries);
  }
  json doc;
  doc["worlds"] = m.worlds();
  doc["denominator"] = den;
  doc["valuation"] = std::move(valuation);
  if (world) doc["world"] = *world;
  return doc.dump(2);
}

}  // namespace blw
