#include "blw/proof_io.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "blw/parse.hpp"

namespace blw {

namespace {

using nlohmann::json;

NDProof nd_from_json(const json& node) {
  if (!node.is_object())
    throw std::invalid_argument("proof: node must be an object");
  if (!node.contains("rule") || !node["rule"].is_string())
    throw std::invalid_argument("proof: node requires a rule name");
  if (!node.contains("sequent") || !node["sequent"].is_string())
    throw std::invalid_argument("proof: node requires a sequent");

  const std::string rule_name = node["rule"].get<std::string>();
  const auto rule = nd_rule_from_name(rule_name);
  if (!rule) throw std::invalid_argument("proof: unknown rule \"" + rule_name + "\"");

  Sequent sequent = parse_sequent(node["sequent"].get<std::string>());
  std::vector<NDProof> premises;
  if (node.contains("premises")) {
    if (!node["premises"].is_array())
      throw std::invalid_argument("proof: premises must be an array");
    for (const json& premise : node["premises"]) premises.push_back(nd_from_json(premise));
  }
  return NDProof{*rule, std::move(sequent), std::move(premises)};
}

json nd_to_json(const NDProof& p) {
  json node;
  node["rule"] = nd_rule_name(p.rule);
  node["sequent"] = render(p.sequent);
  json premises = json::array();
  for (const NDProof& premise : p.premises) premises.push_back(nd_to_json(premise));
  node["premises"] = std::move(premises);
  return node;
}

}  // namespace

NDProof load_nd_proof(const std::string& json_text) {
  return nd_from_json(json::parse(json_text));
}

std::string save_nd_proof(const NDProof& p) { return nd_to_json(p).dump(2); }

HilbertProof load_hilbert_proof(const std::string& json_text) {
  const json doc = json::parse(json_text);
  if (!doc.is_object() || !doc.contains("lines") || !doc["lines"].is_array())
    throw std::invalid_argument("proof: requires a lines array");

  HilbertProof out;
  for (const json& entry : doc["lines"]) {
    if (!entry.is_object() || !entry.contains("formula") || !entry["formula"].is_string())
      throw std::invalid_argument("proof: every line requires a formula");
    Formula formula = parse_formula(entry["formula"].get<std::string>());
    const bool has_axiom = entry.contains("axiom");
    const bool has_mp = entry.contains("mp");
    if (has_axiom == has_mp)
      throw std::invalid_argument("proof: a line is either an axiom or modus ponens");
    if (has_axiom) {
      if (!entry["axiom"].is_string())
        throw std::invalid_argument("proof: axiom id must be a string");
      const std::string name = entry["axiom"].get<std::string>();
      const auto id = axiom_from_name(name);
      if (!id) throw std::invalid_argument("proof: unknown axiom \"" + name + "\"");
      out.lines.push_back({std::move(formula), *id});
    } else {
      const json& mp = entry["mp"];
      if (!mp.is_array() || mp.size() != 2 || !mp[0].is_number_unsigned() ||
          !mp[1].is_number_unsigned())
        throw std::invalid_argument("proof: mp must cite two line numbers");
      out.lines.push_back(
          {std::move(formula), MpRef{mp[0].get<std::size_t>(), mp[1].get<std::size_t>()}});
    }
  }
  return out;
}

std::string save_hilbert_proof(const HilbertProof& p) {
  json lines = json::array();
  for (const HilbertLine& line : p.lines) {
    json entry;
    entry["formula"] = render(line.formula);
    if (const auto* id = std::get_if<AxiomId>(&line.justification)) {
      entry["axiom"] = axiom_name(*id);
    } else {
      const MpRef mp = std::get<MpRef>(line.justification);
      entry["mp"] = json::array({mp.implication, mp.antecedent});
    }
    lines.push_back(std::move(entry));
  }
  json doc;
  doc["lines"] = std::move(lines);
  return doc.dump(2);
}

}  // namespace blw
