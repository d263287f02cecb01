#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concord/coherence.hpp"

namespace concord {

struct InferenceRule {
  std::string name;
  std::vector<std::string> atoms;       // may be empty; atoms are then collected
  std::vector<Formula> constraints;     // asserted impossible
  std::vector<ConditionalEvent> premises;
  ConditionalEvent conclusion;
  std::optional<bool> expected_p_valid; // set for catalog fixtures
};

struct EntailmentVerdict {
  bool p_consistent = false;
  bool p_valid = false;
  // Lexicographically smallest premise subset whose quasi conjunction is
  // GN-included in the conclusion, when one exists.
  std::optional<IndexSet> witness;
  // The degenerate route: the conclusion's antecedent implies its consequent.
  bool antecedent_implies_consequent = false;
  // Lower endpoint of the conclusion's coherent extension given all-ones
  // premises; equals 1 exactly when the rule is p-valid.
  std::optional<Rational> lp_lower_bound;
};

Universe rule_universe(const InferenceRule& rule);

// All-ones coherence on the premises; also validates the equivalent
// prevision form P[C(F)] = 1 (with every subset symbol at 1) and throws
// std::logic_error if the two routes ever disagree.
bool p_consistent(const Universe& u, const std::vector<ConditionalEvent>& premises);

// Decision procedure: degenerate route, then quasi-conjunction subsets, with
// the LP extension bound asserted to agree. Premise sets beyond
// `subset_guard` skip the enumeration and decide by the LP alone.
EntailmentVerdict p_entails(const InferenceRule& rule, int subset_guard = 10);

// C_{n+1} and C_n coincide entrywise on the relevant constituents with
// premises at all-ones (symbols carrying the conclusion stay free).
bool check_condition_ii(const InferenceRule& rule);

// C_n at all-ones never exceeds the conclusion on the relevant constituents.
bool check_condition_iii(const InferenceRule& rule);

InferenceRule generalized_or_rule(int n);

// The named fixtures with expected verdicts attached.
std::vector<InferenceRule> builtin_rules();

std::optional<InferenceRule> find_builtin_rule(const std::string& name);

}  // namespace concord
