#include "omegasynth/json_io.hpp"

#include <json.hpp>

#include "omegasynth/errors.hpp"

namespace omegasynth {

namespace {

using json = nlohmann::ordered_json;

int get_int(const json& j, const std::string& field, int lo, int hi) {
  if (!j.is_number_integer()) throw SchemaError(field, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi)
    throw SchemaError(field, "value " + std::to_string(v) + " out of range [" +
                                 std::to_string(lo) + "," + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

const json& get_member(const json& j, const std::string& field) {
  auto it = j.find(field);
  if (it == j.end()) throw SchemaError(field, "missing");
  return *it;
}

}  // namespace

Nba parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("(document)", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("(document)", "expected an object");

  Nba out;
  out.num_states = get_int(get_member(doc, "num_states"), "num_states", 0, 1000000);

  const json& alpha = get_member(doc, "alphabet");
  if (!alpha.is_array()) throw SchemaError("alphabet", "expected an array of strings");
  for (size_t i = 0; i < alpha.size(); ++i) {
    std::string field = "alphabet[" + std::to_string(i) + "]";
    if (!alpha[i].is_string()) throw SchemaError(field, "expected a string");
    std::string label = alpha[i].get<std::string>();
    if (label.empty()) throw SchemaError(field, "empty label");
    for (size_t k = 0; k < i; ++k)
      if (out.alphabet[k] == label) throw SchemaError(field, "duplicate label '" + label + "'");
    out.alphabet.push_back(label);
  }

  const json& init = get_member(doc, "initial");
  if (!init.is_array()) throw SchemaError("initial", "expected an array of state ids");
  for (size_t i = 0; i < init.size(); ++i)
    out.initial.insert(
        get_int(init[i], "initial[" + std::to_string(i) + "]", 0, out.num_states - 1));

  const json& kind = get_member(doc, "acceptance_kind");
  if (!kind.is_string()) throw SchemaError("acceptance_kind", "expected a string");
  std::string kind_s = kind.get<std::string>();
  if (kind_s == "transition") {
    out.acceptance_kind = AcceptanceKind::TransitionBased;
  } else if (kind_s == "state") {
    out.acceptance_kind = AcceptanceKind::StateBased;
  } else {
    throw SchemaError("acceptance_kind", "expected \"transition\" or \"state\"");
  }

  if (doc.contains("accepting_states")) {
    const json& acc = doc["accepting_states"];
    if (!acc.is_array()) throw SchemaError("accepting_states", "expected an array of state ids");
    if (out.acceptance_kind == AcceptanceKind::TransitionBased && !acc.empty())
      throw SchemaError("accepting_states",
                        "must be empty for acceptance_kind \"transition\"");
    for (size_t i = 0; i < acc.size(); ++i)
      out.accepting_states.insert(
          get_int(acc[i], "accepting_states[" + std::to_string(i) + "]", 0, out.num_states - 1));
  }

  const json& trans = get_member(doc, "transitions");
  if (!trans.is_array()) throw SchemaError("transitions", "expected an array");
  for (size_t i = 0; i < trans.size(); ++i) {
    std::string field = "transitions[" + std::to_string(i) + "]";
    const json& t = trans[i];
    if (!t.is_object()) throw SchemaError(field, "expected an object");
    Transition tr;
    tr.src = get_int(get_member(t, "src"), field + ".src", 0, out.num_states - 1);
    tr.sym = get_int(get_member(t, "sym"), field + ".sym", 0,
                     static_cast<int>(out.alphabet.size()) - 1);
    tr.dst = get_int(get_member(t, "dst"), field + ".dst", 0, out.num_states - 1);
    if (t.contains("acc")) {
      if (!t["acc"].is_boolean()) throw SchemaError(field + ".acc", "expected a boolean");
      tr.accepting = t["acc"].get<bool>();
    }
    if (tr.accepting && out.acceptance_kind == AcceptanceKind::StateBased)
      throw SchemaError(field + ".acc",
                        "accepting edge flag not allowed with acceptance_kind \"state\"");
    out.transitions.push_back(tr);
  }
  out.validate();
  return out;
}

std::string emit_json(const Nba& b) {
  json doc;
  doc["num_states"] = b.num_states;
  doc["alphabet"] = b.alphabet;
  doc["initial"] = std::vector<StateId>(b.initial.begin(), b.initial.end());
  doc["acceptance_kind"] =
      b.acceptance_kind == AcceptanceKind::TransitionBased ? "transition" : "state";
  doc["accepting_states"] =
      std::vector<StateId>(b.accepting_states.begin(), b.accepting_states.end());
  json trans = json::array();
  for (const auto& t : b.transitions) {
    json e;
    e["src"] = t.src;
    e["sym"] = t.sym;
    e["dst"] = t.dst;
    e["acc"] = t.accepting;
    trans.push_back(e);
  }
  doc["transitions"] = trans;
  return doc.dump(2) + "\n";
}

std::string emit_json(const Nfa& a) {
  json doc;
  doc["num_states"] = a.num_states;
  doc["alphabet"] = a.alphabet;
  doc["initial"] = std::vector<StateId>(a.initial.begin(), a.initial.end());
  doc["accepting"] = std::vector<StateId>(a.accepting.begin(), a.accepting.end());
  json trans = json::array();
  for (const auto& t : a.transitions) {
    json e;
    e["src"] = t.src;
    e["sym"] = t.sym;
    e["dst"] = t.dst;
    trans.push_back(e);
  }
  doc["transitions"] = trans;
  return doc.dump(2) + "\n";
}

}  // namespace omegasynth
