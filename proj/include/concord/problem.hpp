#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concord/coherence.hpp"
#include "concord/entailment.hpp"

namespace concord {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structured problem input. Formulas are embedded strings in the event
// grammar; numbers accept "p/q" and finite decimals.
struct ProblemFile {
  struct Cond {
    std::string name;
    std::string then_text;
    std::string given_text;
  };
  struct Entry {
    std::vector<std::string> on;
    std::string op = "and";  // single names ignore it
    std::string value;
    // Pinned entries value a sub-prevision symbol used inside other
    // quantities' tables without adding the quantity itself to the family
    // under check.
    bool pin = false;
  };
  struct Query {
    std::string kind;  // "extend" | "table" | "entail"
    std::vector<std::string> on;
    std::string op = "and";
    std::vector<std::string> premises;
    std::string conclusion;
  };

  std::vector<std::string> atoms;
  std::vector<std::string> constraints;
  std::vector<Cond> conditionals;
  std::vector<Entry> assessment;
  std::optional<Query> query;
};

ProblemFile parse_problem_text(const std::string& json_text);
ProblemFile load_problem(const std::string& path);

// The file's conditionals over its universe, with the assessed quantities.
struct EngineInstance {
  SpacePtr space;
  std::vector<std::string> names;  // conditional names, by family position
  CoherenceProblem problem;
};

EngineInstance build_instance(const ProblemFile& file, int max_atoms = Universe::kDefaultMaxAtoms);

Quantity make_quantity(const EngineInstance& inst, const std::vector<std::string>& on,
                       const std::string& op);

InferenceRule make_rule(const ProblemFile& file);

}  // namespace concord
