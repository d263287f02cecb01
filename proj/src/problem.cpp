#include "concord/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace concord {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw InputError(std::string(what) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

ProblemFile parse_problem_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("problem file must be a JSON object");

  ProblemFile f;
  if (j.contains("atoms")) f.atoms = string_list(j["atoms"], "atoms");
  if (j.contains("constraints")) f.constraints = string_list(j["constraints"], "constraints");

  if (!j.contains("conditionals")) throw InputError("missing \"conditionals\"");
  for (const auto& c : j["conditionals"]) {
    if (!c.is_object() || !c.contains("name") || !c.contains("then") || !c.contains("given")) {
      throw InputError("conditionals need name/then/given");
    }
    f.conditionals.push_back({c["name"].get<std::string>(), c["then"].get<std::string>(),
                              c["given"].get<std::string>()});
  }

  if (j.contains("assessment")) {
    for (const auto& e : j["assessment"]) {
      if (!e.is_object() || !e.contains("on") || !e.contains("value")) {
        throw InputError("assessment entries need on/value");
      }
      ProblemFile::Entry entry;
      entry.on = string_list(e["on"], "assessment.on");
      if (e.contains("op")) entry.op = e["op"].get<std::string>();
      if (e.contains("pin")) entry.pin = e["pin"].get<bool>();
      if (e["value"].is_string()) {
        entry.value = e["value"].get<std::string>();
      } else if (e["value"].is_number_integer()) {
        entry.value = std::to_string(e["value"].get<long long>());
      } else {
        throw InputError("assessment values must be strings like \"3/5\" or \"0.6\"");
      }
      f.assessment.push_back(std::move(entry));
    }
  }

  if (j.contains("query")) {
    const auto& q = j["query"];
    if (!q.is_object() || !q.contains("kind")) throw InputError("query needs a kind");
    ProblemFile::Query query;
    query.kind = q["kind"].get<std::string>();
    if (q.contains("on")) query.on = string_list(q["on"], "query.on");
    if (q.contains("op")) query.op = q["op"].get<std::string>();
    if (q.contains("premises")) query.premises = string_list(q["premises"], "query.premises");
    if (q.contains("conclusion")) query.conclusion = q["conclusion"].get<std::string>();
    f.query = std::move(query);
  }
  return f;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

namespace {

int index_of(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  throw InputError("unknown conditional name: " + name);
}

CrqTable::Op parse_op(const std::string& op) {
  if (op == "and") return CrqTable::Op::Conj;
  if (op == "or") return CrqTable::Op::Disj;
  throw InputError("unknown op: " + op + " (want and|or)");
}

}  // namespace

EngineInstance build_instance(const ProblemFile& file, int max_atoms) {
  if (file.conditionals.empty()) throw InputError("no conditionals declared");

  std::vector<Formula> constraints;
  for (const auto& c : file.constraints) constraints.push_back(parse_formula(c));

  std::vector<ConditionalEvent> family;
  std::set<std::string> seen;
  for (const auto& c : file.conditionals) {
    if (!seen.insert(c.name).second) throw InputError("duplicate conditional name: " + c.name);
    family.push_back({c.name, parse_formula(c.then_text), parse_formula(c.given_text)});
  }

  std::vector<std::string> atoms = file.atoms;
  if (atoms.empty()) {
    std::set<std::string> names;
    for (const auto& e : family) {
      e.consequent.collect_atoms(&names);
      e.antecedent.collect_atoms(&names);
    }
    for (const auto& f : constraints) f.collect_atoms(&names);
    atoms.assign(names.begin(), names.end());
  }

  EngineInstance inst;
  inst.space = make_space(Universe(std::move(atoms), std::move(constraints), max_atoms),
                          std::move(family));
  for (const auto& c : file.conditionals) inst.names.push_back(c.name);

  inst.problem.space = inst.space;
  for (const auto& e : file.assessment) {
    Quantity q = make_quantity(inst, e.on, e.op);
    if (inst.problem.assessment.find(quantity_symbol(q))) {
      throw InputError("duplicate assessment for " + quantity_symbol(q).str());
    }
    Rational value;
    try {
      value = parse_rational(e.value);
    } catch (const NumberError& err) {
      throw InputError(err.what());
    }
    if (!in_unit_interval(value)) {
      throw InputError("assessment value outside [0,1]: " + e.value);
    }
    if (!e.pin) inst.problem.quantities.push_back(q);
    inst.problem.assessment.set(quantity_symbol(q), value);
  }
  return inst;
}

Quantity make_quantity(const EngineInstance& inst, const std::vector<std::string>& on,
                       const std::string& op) {
  if (on.empty()) throw InputError("empty quantity member list");
  IndexSet members;
  for (const auto& name : on) members = members.with(index_of(inst.names, name));
  if (members.count() != static_cast<int>(on.size())) {
    throw InputError("repeated conditional in member list");
  }
  return {parse_op(op), members};
}

InferenceRule make_rule(const ProblemFile& file) {
  if (!file.query || file.query->kind != "entail") {
    throw InputError("file carries no entail query");
  }
  std::vector<ConditionalEvent> family;
  std::vector<std::string> names;
  for (const auto& c : file.conditionals) {
    family.push_back({c.name, parse_formula(c.then_text), parse_formula(c.given_text)});
    names.push_back(c.name);
  }
  InferenceRule rule;
  rule.name = "file";
  rule.atoms = file.atoms;
  for (const auto& c : file.constraints) rule.constraints.push_back(parse_formula(c));
  if (file.query->premises.empty()) throw InputError("entail query needs premises");
  for (const auto& p : file.query->premises) rule.premises.push_back(family[index_of(names, p)]);
  if (file.query->conclusion.empty()) throw InputError("entail query needs a conclusion");
  rule.conclusion = family[index_of(names, file.query->conclusion)];
  return rule;
}

}  // namespace concord
