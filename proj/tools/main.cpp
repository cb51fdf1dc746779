// blw: command-line workbench for the BL proof systems and their
// finite-chain Kripke semantics.
//
// Exit codes: 0 ok / none-found, 1 rejected / countermodel / witness,
// 2 usage, IO and parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "blw/hilbert.hpp"
#include "blw/lbm.hpp"
#include "blw/model_io.hpp"
#include "blw/nd.hpp"
#include "blw/parse.hpp"
#include "blw/proof_io.hpp"
#include "blw/search.hpp"
#include "blw/syntax.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
  out << text;
}

unsigned thread_cap_from_env() {
  const char* raw = std::getenv("BLW_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;  // auto
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (end == nullptr || *end != '\0')
    throw std::runtime_error("BLW_THREADS must be a non-negative integer");
  return static_cast<unsigned>(v);
}

void emit(bool as_json, const json& doc, const std::string& human) {
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

int cmd_parse(bool as_json, const std::string& text) {
  const blw::Formula f = blw::parse_formula(text);
  json doc;
  doc["status"] = "ok";
  doc["ast"] = blw::ast_string(f);
  doc["formula"] = blw::render(f);
  emit(as_json, doc, blw::ast_string(f) + "\n" + blw::render(f));
  return kOk;
}

int cmd_eval(bool as_json, const std::string& model_path, std::size_t world,
             const std::string& formula_text) {
  const blw::LBMStructure m = blw::load_model(read_file(model_path));
  const blw::Formula f = blw::parse_formula(formula_text);
  const blw::MVValue value = blw::eval(m, world, f);
  json doc;
  doc["status"] = "ok";
  doc["value"] = value.str();
  emit(as_json, doc, value.str());
  return kOk;
}

int cmd_check(bool as_json, const std::string& nd_path, const std::string& hilbert_path,
              const std::string& translate_path) {
  if (!nd_path.empty()) {
    const blw::NDProof proof = blw::load_nd_proof(read_file(nd_path));
    const blw::Sequent& conclusion = blw::check_nd(proof);
    json doc;
    doc["status"] = "ok";
    doc["conclusion"] = blw::render(conclusion);
    emit(as_json, doc, "ok: " + blw::render(conclusion));
    return kOk;
  }
  const blw::HilbertProof proof = blw::load_hilbert_proof(read_file(hilbert_path));
  const blw::Formula conclusion = blw::check_hilbert(proof);
  json doc;
  doc["status"] = "ok";
  doc["conclusion"] = blw::render(conclusion);
  std::string human = "ok: " + blw::render(conclusion);
  if (!translate_path.empty()) {
    const blw::NDProof translated = blw::hilbert_to_nd(proof);
    write_file(translate_path, blw::save_nd_proof(translated) + "\n");
    doc["translation"] = translate_path;
    human += "\ntranslation written: " + translate_path;
  }
  emit(as_json, doc, human);
  return kOk;
}

int cmd_valid(bool as_json, const std::string& sequent_text, std::size_t max_worlds,
              std::size_t max_denom) {
  const blw::Sequent s = blw::parse_sequent(sequent_text);
  const blw::SearchBounds bounds{max_worlds, max_denom};
  const blw::SearchOutcome outcome =
      blw::find_countermodel(s, bounds, thread_cap_from_env());

  if (outcome.found()) {
    const blw::Countermodel& cm = *outcome.countermodel;
    const std::string model = blw::save_model(cm.structure, cm.world);
    json doc;
    doc["status"] = "countermodel";
    doc["sequent"] = blw::render(s);
    doc["model"] = json::parse(model);
    doc["lhs"] = cm.premise_value.str();
    doc["rhs"] = cm.conclusion_value.str();
    doc["structures_checked"] = outcome.structures_checked;
    emit(as_json, doc,
         "countermodel: world " + std::to_string(cm.world) + ", context " +
             cm.premise_value.str() + " > conclusion " + cm.conclusion_value.str() + "\n" +
             model);
    return kRejected;
  }

  json doc;
  doc["status"] = "none-found";
  doc["bounds"] = {{"max_worlds", bounds.max_worlds},
                   {"max_denominator", bounds.max_denominator}};
  doc["structures_checked"] = outcome.structures_checked;
  emit(as_json, doc,
       "none-found: " + std::to_string(outcome.structures_checked) +
           " structures checked (max worlds " + std::to_string(bounds.max_worlds) +
           ", max denominator " + std::to_string(bounds.max_denominator) + ")");
  return kOk;
}

int cmd_fuzz(bool as_json, const std::string& proof_path, std::uint64_t trials,
             std::uint64_t seed, std::size_t max_worlds, std::size_t max_denom) {
  const blw::NDProof proof = blw::load_nd_proof(read_file(proof_path));
  // Fuzzing deliberately skips the proof checker: it probes the node
  // sequents semantically, so a corrupted tree is caught by a witness
  // rather than rejected syntactically.
  const std::vector<blw::Sequent> sequents = blw::collect_sequents(proof);
  const blw::SearchBounds bounds{max_worlds, max_denom};
  const blw::FuzzReport report = blw::fuzz_sequents(sequents, trials, bounds, seed);

  if (report.passed()) {
    json doc;
    doc["status"] = "passed";
    doc["sequents"] = report.sequents;
    doc["trials"] = report.trials;
    emit(as_json, doc,
         "passed: " + std::to_string(report.sequents) + " sequent(s) x " +
             std::to_string(report.trials) + " trial(s)");
    return kOk;
  }

  const blw::FuzzWitness& w = *report.witness;
  const std::string model = blw::save_model(w.structure, w.world);
  json doc;
  doc["status"] = "witness";
  doc["sequent_index"] = w.sequent_index;
  doc["sequent"] = blw::render(w.sequent);
  doc["model"] = json::parse(model);
  doc["lhs"] = w.premise_value.str();
  doc["rhs"] = w.conclusion_value.str();
  emit(as_json, doc,
       "witness: sequent " + std::to_string(w.sequent_index) + " \"" +
           blw::render(w.sequent) + "\" fails at world " + std::to_string(w.world) + "\n" +
           model);
  return kRejected;
}

int report_rejection(bool as_json, const std::string& message) {
  json doc;
  doc["status"] = "rejected";
  doc["message"] = message;
  emit(as_json, doc, "rejected: " + message);
  return kRejected;
}

int report_error(bool as_json, const std::string& message) {
  if (as_json) {
    json doc;
    doc["status"] = "error";
    doc["message"] = message;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for the logic BL: parsing, proof checking, finite-chain "
               "Kripke evaluation and bounded countermodel search"};
  app.require_subcommand(1);
  app.fallthrough();  // let --json appear after the subcommand too
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string formula_text, sequent_text, model_path, proof_nd, proof_hilbert, translate;
  std::size_t world = 0, max_worlds = 3, max_denom = 4;
  std::uint64_t trials = 500, seed = 0;

  CLI::App* parse = app.add_subcommand("parse", "parse a formula and print its tree");
  parse->add_option("formula", formula_text, "formula text")->required();

  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula on a model at a world");
  eval->add_option("model", model_path, "model file (JSON)")->required();
  eval->add_option("world", world, "world index")->required();
  eval->add_option("formula", formula_text, "formula text")->required();

  CLI::App* check = app.add_subcommand("check", "check a proof file");
  CLI::Option* nd_opt = check->add_option("--nd", proof_nd, "natural deduction proof file");
  CLI::Option* hi_opt = check->add_option("--hilbert", proof_hilbert, "Hilbert proof file");
  check->add_option("--translate", translate,
                    "with --hilbert: write the natural deduction translation here")
      ->needs(hi_opt);
  nd_opt->excludes(hi_opt);

  CLI::App* valid = app.add_subcommand("valid", "search for a countermodel to a sequent");
  valid->add_option("sequent", sequent_text, "sequent text, e.g. \"p, q |- p*q\"")
      ->required();
  valid->add_option("--max-worlds", max_worlds, "frame size bound")->check(CLI::PositiveNumber);
  valid->add_option("--max-denom", max_denom, "denominator bound")->check(CLI::PositiveNumber);

  CLI::App* fuzz = app.add_subcommand("fuzz", "evaluate proof sequents on random models");
  fuzz->add_option("proof", proof_nd, "natural deduction proof file")->required();
  fuzz->add_option("--trials", trials, "random structures per sequent");
  fuzz->add_option("--seed", seed, "generator seed");
  fuzz->add_option("--max-worlds", max_worlds, "frame size bound")->check(CLI::PositiveNumber);
  fuzz->add_option("--max-denom", max_denom, "denominator bound")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (parse->parsed()) return cmd_parse(as_json, formula_text);
    if (eval->parsed()) return cmd_eval(as_json, model_path, world, formula_text);
    if (check->parsed()) {
      if (proof_nd.empty() && proof_hilbert.empty())
        return report_error(as_json, "check requires --nd or --hilbert");
      return cmd_check(as_json, proof_nd, proof_hilbert, translate);
    }
    if (valid->parsed()) return cmd_valid(as_json, sequent_text, max_worlds, max_denom);
    if (fuzz->parsed()) return cmd_fuzz(as_json, proof_nd, trials, seed, max_worlds, max_denom);
  } catch (const blw::NdError& e) {
    return report_rejection(as_json, e.what());
  } catch (const blw::HilbertError& e) {
    return report_rejection(as_json, e.what());
  } catch (const std::exception& e) {
    return report_error(as_json, e.what());
  }
  return kError;
}
