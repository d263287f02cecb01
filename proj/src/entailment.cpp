#include "concord/entailment.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace concord {

Universe rule_universe(const InferenceRule& rule) {
  std::set<std::string> names(rule.atoms.begin(), rule.atoms.end());
  for (const auto& p : rule.premises) {
    p.consequent.collect_atoms(&names);
    p.antecedent.collect_atoms(&names);
  }
  rule.conclusion.consequent.collect_atoms(&names);
  rule.conclusion.antecedent.collect_atoms(&names);
  for (const auto& c : rule.constraints) c.collect_atoms(&names);
  return Universe(std::vector<std::string>(names.begin(), names.end()), rule.constraints);
}

bool p_consistent(const Universe& u, const std::vector<ConditionalEvent>& premises) {
  SpacePtr space = make_space(u, premises);
  const int n = space->family_size();

  std::vector<Rational> ones(n, Rational(1));
  bool direct = check_coherence(conditionals_problem(space, ones)).coherent;

  // Prevision form: P[C(F)] = 1. The subset previsions are part of the
  // quantity's specification and all forced to 1, so the cross-check runs
  // the joint system over every subset conjunction.
  if (n <= 5) {
    CoherenceProblem prev;
    prev.space = space;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
      prev.quantities.push_back({CrqTable::Op::Conj, IndexSet(mask)});
      prev.assessment.set({PrevisionSymbol::Kind::Conj, IndexSet(mask), false}, 1);
    }
    bool via_conjunction = check_coherence(prev).coherent;
    if (direct != via_conjunction) {
      throw std::logic_error("p-consistency routes disagree");
    }
  }
  return direct;
}

namespace {

// Families are sets: a conclusion that behaves exactly like a premise on
// every admissible world adds nothing to the conjunction.
bool same_conditional(const Universe& u, const ConditionalEvent& a, const ConditionalEvent& b) {
  for (World w : u.worlds()) {
    if (u.status(a, w) != u.status(b, w)) return false;
  }
  return true;
}

int duplicate_premise(const Universe& u, const InferenceRule& rule) {
  for (std::size_t i = 0; i < rule.premises.size(); ++i) {
    if (same_conditional(u, rule.premises[i], rule.conclusion)) return static_cast<int>(i);
  }
  return -1;
}

std::vector<ConditionalEvent> joint_family(const InferenceRule& rule) {
  std::vector<ConditionalEvent> fam = rule.premises;
  fam.push_back(rule.conclusion);
  return fam;
}

// Three-valued entry under all-ones premises: 0, 1, or free (a prevision
// involving the conclusion, pinned only when its antecedent implies its
// consequent).
enum class V3 : uint8_t { Zero, One, Free };

// Memoized GN-inclusion of subset quasi conjunctions in the conclusion.
// When QC(F_Gamma) is included in the conclusion, the conjunction over
// Gamma absorbs the conclusion, which pins the symbols the all-ones
// instantiation leaves free.
class AbsorptionTable {
 public:
  AbsorptionTable(const Universe& u, SpacePtr premise_space, const ConditionalEvent& conclusion)
      : u_(u), space_(std::move(premise_space)), conclusion_(conclusion) {
    cache_.assign(std::size_t{1} << space_->family_size(), -1);
  }

  bool absorbing(IndexSet gamma) {
    char& slot = cache_[gamma.bits()];
    if (slot < 0) {
      auto [event, table] = quasi_conjunction(space_, gamma);
      slot = gn_inclusion(u_, event, conclusion_) ? 1 : 0;
    }
    return slot == 1;
  }

  bool any_absorbing_within(IndexSet s) {
    for (uint32_t sub = s.bits(); sub; sub = (sub - 1) & s.bits()) {
      if (absorbing(IndexSet(sub))) return true;
    }
    return false;
  }

  bool any_absorbing() { return any_absorbing_within(IndexSet::full(space_->family_size())); }

 private:
  const Universe& u_;
  SpacePtr space_;
  ConditionalEvent conclusion_;
  std::vector<char> cache_;
};

}  // namespace

bool check_condition_ii(const InferenceRule& rule) {
  Universe u = rule_universe(rule);
  if (duplicate_premise(u, rule) >= 0) return true;
  SpacePtr space = make_space(u, joint_family(rule));
  const int n = static_cast<int>(rule.premises.size());
  const IndexSet premises_set = IndexSet::full(n);
  const IndexSet all = premises_set.with(n);
  const bool forced_one = u.implies(rule.conclusion.antecedent, rule.conclusion.consequent);
  AbsorptionTable absorption(u, make_space(u, rule.premises), rule.conclusion);

  for (std::size_t h = 0; h < space->cells.size(); ++h) {
    if (!space->in_h_disjunction(h, all)) continue;
    const Constituent& cell = space->cells[h];
    V3 lhs, rhs;
    if (!(cell.sdoubleprime & all).empty()) {
      lhs = V3::Zero;
    } else {
      lhs = (cell.striple & all).contains(n) ? V3::Free : V3::One;
    }
    rhs = (cell.sdoubleprime & premises_set).empty() ? V3::One : V3::Zero;
    if (lhs == rhs) continue;
    if (lhs == V3::Free && rhs == V3::One) {
      if (forced_one) continue;
      // x_{S u {n+1}} equals x_S whenever some subset of the void premises
      // absorbs the conclusion.
      if (absorption.any_absorbing_within(cell.striple & premises_set)) continue;
    }
    return false;
  }
  return true;
}

bool check_condition_iii(const InferenceRule& rule) {
  Universe u = rule_universe(rule);
  if (duplicate_premise(u, rule) >= 0) return true;
  SpacePtr space = make_space(u, joint_family(rule));
  const int n = static_cast<int>(rule.premises.size());
  const IndexSet premises_set = IndexSet::full(n);
  const IndexSet all = premises_set.with(n);
  const bool forced_one = u.implies(rule.conclusion.antecedent, rule.conclusion.consequent);
  AbsorptionTable absorption(u, make_space(u, rule.premises), rule.conclusion);

  for (std::size_t h = 0; h < space->cells.size(); ++h) {
    if (!space->in_h_disjunction(h, all)) continue;
    const Constituent& cell = space->cells[h];
    bool lhs_one = (cell.sdoubleprime & premises_set).empty();  // premise symbols are 1
    if (!lhs_one) continue;
    switch (cell.signature[n]) {
      case Status::True:
        break;
      case Status::False:
        return false;
      case Status::Void:
        // The conclusion's prevision is pinned to 1 when forced logically or
        // when some quasi conjunction of premises is GN-included in it.
        if (!forced_one && !absorption.any_absorbing()) return false;
        break;
    }
  }
  return true;
}

EntailmentVerdict p_entails(const InferenceRule& rule, int subset_guard) {
  EntailmentVerdict verdict;
  Universe u = rule_universe(rule);
  verdict.p_consistent = p_consistent(u, rule.premises);
  if (!verdict.p_consistent) {
    // p-entailment is defined for p-consistent premise sets only.
    verdict.p_valid = false;
    return verdict;
  }

  const int n = static_cast<int>(rule.premises.size());
  bool qc_route_ran = false;
  bool qc_valid = false;

  if (u.implies(rule.conclusion.antecedent, rule.conclusion.consequent)) {
    verdict.antecedent_implies_consequent = true;
    qc_route_ran = true;
    qc_valid = true;
  } else if (n <= subset_guard) {
    qc_route_ran = true;
    SpacePtr premise_space = make_space(u, rule.premises);
    std::vector<IndexSet> subsets;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) subsets.emplace_back(mask);
    std::sort(subsets.begin(), subsets.end(), [](IndexSet a, IndexSet b) {
      if (a.count() != b.count()) return a.count() < b.count();
      return a < b;
    });
    for (IndexSet gamma : subsets) {
      auto [event, table] = quasi_conjunction(premise_space, gamma);
      if (gn_inclusion(u, event, rule.conclusion)) {
        verdict.witness = gamma;
        qc_valid = true;
        break;
      }
    }
  }

  // LP route: lower endpoint of the conclusion's coherent extension at the
  // all-ones premise assessment.
  SpacePtr joint = make_space(u, joint_family(rule));
  CoherenceProblem base;
  base.space = joint;
  for (int i = 0; i < n; ++i) {
    Quantity q{CrqTable::Op::Conj, IndexSet::single(i)};
    base.quantities.push_back(q);
    base.assessment.set(quantity_symbol(q), 1);
  }
  Quantity target{CrqTable::Op::Conj, IndexSet::single(n)};
  ExtensionResult ext = extension_interval(base, target);
  verdict.lp_lower_bound = ext.lo.value;
  bool lp_valid = ext.lo.closed && ext.lo.value == 1;

  if (qc_route_ran && qc_valid != lp_valid) {
    throw std::logic_error("p-entailment routes disagree on rule " + rule.name);
  }
  verdict.p_valid = lp_valid;
  return verdict;
}

namespace {

ConditionalEvent ce(std::string name, const char* then_text, const char* given_text) {
  return {std::move(name), parse_formula(then_text), parse_formula(given_text)};
}

}  // namespace

InferenceRule generalized_or_rule(int n) {
  if (n < 2 || n > 4) throw DomainError("generalized Or supports 2..4 antecedents");
  InferenceRule r;
  r.name = "GeneralizedOr";
  std::vector<Formula> ants;
  for (int i = 1; i <= n; ++i) {
    std::string atom = "A" + std::to_string(i);
    r.premises.push_back({"p" + std::to_string(i), parse_formula("C"), Formula::atom(atom)});
    ants.push_back(Formula::atom(atom));
  }
  r.conclusion = {"c", parse_formula("C"), Formula::disjunction(std::move(ants))};
  r.expected_p_valid = true;
  return r;
}

std::vector<InferenceRule> builtin_rules() {
  std::vector<InferenceRule> rules;

  rules.push_back({"And", {}, {}, {ce("p1", "B", "A"), ce("p2", "C", "A")},
                   ce("c", "B & C", "A"), true});
  rules.push_back({"Cut", {}, {}, {ce("p1", "C", "A & B"), ce("p2", "B", "A")},
                   ce("c", "C", "A"), true});
  rules.push_back({"CCT", {}, {}, {ce("p1", "C", "A & B"), ce("p2", "B", "A")},
                   ce("c", "B & C", "A"), true});
  rules.push_back({"CM", {}, {}, {ce("p1", "C", "A"), ce("p2", "B", "A")},
                   ce("c", "C", "A & B"), true});
  rules.push_back({"Or", {}, {}, {ce("p1", "C", "A"), ce("p2", "C", "B")},
                   ce("c", "C", "A | B"), true});
  rules.push_back({"AdamsRule5", {}, {}, {ce("p1", "C", "A | B"), ce("p2", "~C", "A")},
                   ce("c", "C", "B"), true});
  rules.push_back(generalized_or_rule(4));
  rules.push_back({"Transitivity", {}, {}, {ce("p1", "C", "B"), ce("p2", "B", "A")},
                   ce("c", "C", "A"), false});
  rules.push_back({"DenialOfAntecedent", {}, {}, {ce("p1", "~A", "T"), ce("p2", "C", "A")},
                   ce("c", "~C", "T"), false});
  rules.push_back({"AffirmationOfConsequent", {}, {}, {ce("p1", "C", "T"), ce("p2", "C", "A")},
                   ce("c", "A", "T"), false});
  rules.push_back({"BooleCombining", {}, {}, {ce("p1", "C", "A"), ce("p2", "C", "B")},
                   ce("c", "C", "A & B"), false});
  rules.push_back({"WeakTransitivityA", {}, {},
                   {ce("p1", "C", "B"), ce("p2", "B", "A"), ce("p3", "A", "A | B")},
                   ce("c", "C", "A"), true});
  rules.push_back({"WeakTransitivityB", {}, {parse_formula("~A & B & C")},
                   {ce("p1", "C", "B"), ce("p2", "B", "A")},
                   ce("c", "C", "A"), true});
  return rules;
}

std::optional<InferenceRule> find_builtin_rule(const std::string& name) {
  for (auto& r : builtin_rules()) {
    if (r.name == name) return r;
  }
  return std::nullopt;
}

}  // namespace concord
