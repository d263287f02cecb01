#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "concord/bounds.hpp"
#include "concord/problem.hpp"

namespace {

using namespace concord;

struct Options {
  std::string format = "human";
  int max_atoms = Universe::kDefaultMaxAtoms;
  bool machine() const { return format == "machine"; }
};

std::string cell_label(const ConstituentSpace& space, std::size_t h) {
  if (space.c0 && *space.c0 == h) return "C_0";
  return "C_" + std::to_string(h + 1);  // C0, when present, is the last cell
}

std::string quantity_name(const EngineInstance& inst, const Quantity& q) {
  auto idx = q.members.indices();
  if (idx.size() == 1) return inst.names[idx.front()];
  std::string out = q.op == CrqTable::Op::Conj ? "and(" : "or(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += inst.names[idx[i]];
  }
  out += ')';
  return out;
}

std::string lambda_string(const EngineInstance& inst, const CoherenceIteration& it) {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < it.lambda.size(); ++k) {
    if (it.lambda[k] == 0) continue;
    if (!first) out += ',';
    out += cell_label(*inst.space, it.cells[k]) + ":" + format_rational(it.lambda[k]);
    first = false;
  }
  return first ? "-" : out;
}

std::string name_list(const EngineInstance& inst, const std::vector<int>& qs) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out += ',';
    out += quantity_name(inst, inst.problem.quantities[qs[i]]);
  }
  return out.empty() ? "-" : out;
}

std::string interval_string(const Rational& lo, const Rational& hi) {
  return "[" + format_rational(lo) + ", " + format_rational(hi) + "]";
}

std::string approx_interval_string(const Rational& lo, const Rational& hi) {
  return "[" + approx_decimal(lo) + ", " + approx_decimal(hi) + "]";
}

int cmd_check(const Options& opt, const std::string& path) {
  EngineInstance inst = build_instance(load_problem(path), opt.max_atoms);
  if (inst.problem.quantities.empty()) throw InputError("file carries no assessment");
  CoherenceVerdict v = check_coherence(inst.problem);

  if (opt.machine()) {
    std::cout << "coherent=" << (v.coherent ? "true" : "false") << "\n";
    std::cout << "iterations=" << v.trace.size() << "\n";
    for (std::size_t k = 0; k < v.trace.size(); ++k) {
      const auto& it = v.trace[k];
      std::cout << "iteration." << k << ".active=" << name_list(inst, it.active) << "\n";
      std::cout << "iteration." << k << ".solvable=" << (it.solvable ? "true" : "false") << "\n";
      std::cout << "iteration." << k << ".I0=" << name_list(inst, it.i0) << "\n";
      std::cout << "iteration." << k << ".lambda=" << lambda_string(inst, it) << "\n";
    }
  } else {
    std::cout << "verdict: " << (v.coherent ? "coherent" : "not coherent") << "\n";
    for (std::size_t k = 0; k < v.trace.size(); ++k) {
      const auto& it = v.trace[k];
      std::cout << "  level " << k << ": family {" << name_list(inst, it.active) << "} ";
      if (!it.solvable) {
        std::cout << "system unsolvable\n";
        continue;
      }
      std::cout << "solvable, I0={" << (it.i0.empty() ? "" : name_list(inst, it.i0)) << "}"
                << ", lambda " << lambda_string(inst, it) << "\n";
    }
  }
  return v.coherent ? 0 : 1;
}

// Closed-form companion for extension queries that match one of the known
// patterns; the LP interval stays authoritative.
struct ClosedForm {
  std::string name;
  Interval interval;
};

std::optional<ClosedForm> closed_form_for(const EngineInstance& inst, const Quantity& target) {
  const auto& qs = inst.problem.quantities;
  const auto& fam = inst.space->family;
  const Universe& u = inst.space->universe;

  auto singleton_index = [](const Quantity& q) -> int {
    auto idx = q.members.indices();
    return (q.op == CrqTable::Op::Conj && idx.size() == 1) ? idx.front() : -1;
  };
  auto value_of = [&](const Quantity& q) { return *inst.problem.assessment.find(quantity_symbol(q)); };

  // All quantities plain conditionals, target spans exactly them.
  bool all_single = !qs.empty();
  IndexSet span;
  for (const auto& q : qs) {
    if (singleton_index(q) < 0) all_single = false;
    span = span | q.members;
  }
  if (all_single && target.members == span &&
      static_cast<int>(qs.size()) == span.count()) {
    std::vector<ConditionalEvent> members;
    std::vector<Rational> xs;
    for (const auto& q : qs) {
      members.push_back(fam[singleton_index(q)]);
      xs.push_back(value_of(q));
    }
    if (logically_independent(u, members)) {
      if (target.op == CrqTable::Op::Conj) {
        if (xs.size() == 2) return ClosedForm{"two-event conjunction", frechet_two(xs[0], xs[1])};
        return ClosedForm{"n-event conjunction", frechet_conjunction_n(xs)};
      }
      return ClosedForm{"n-event disjunction", frechet_disjunction_n(xs)};
    }
  }

  // Step pattern: a conjunction plus one fresh conditional, target joins them.
  if (qs.size() == 2 && target.op == CrqTable::Op::Conj) {
    for (int a = 0; a < 2; ++a) {
      const Quantity& conj = qs[a];
      const Quantity& single = qs[1 - a];
      int j = singleton_index(single);
      if (conj.op != CrqTable::Op::Conj || j < 0 || conj.members.contains(j)) continue;
      if (!(target.members == (conj.members | single.members))) continue;
      std::vector<ConditionalEvent> all;
      for (int i : target.members.indices()) all.push_back(fam[i]);
      if (!logically_independent(u, all)) continue;
      return ClosedForm{"conjunction step", conj_step_bounds(value_of(conj), value_of(single))};
    }
  }

  // Three-event pattern: three singletons, the three pairs, target the triple.
  if (qs.size() == 6 && target.op == CrqTable::Op::Conj && target.members.count() == 3) {
    std::vector<int> singles;
    std::vector<const Quantity*> pairs;
    for (const auto& q : qs) {
      if (int i = singleton_index(q); i >= 0) {
        singles.push_back(i);
      } else if (q.op == CrqTable::Op::Conj && q.members.count() == 2 &&
                 q.members.subset_of(target.members)) {
        pairs.push_back(&q);
      }
    }
    if (singles.size() == 3 && pairs.size() == 3) {
      IndexSet span3 = IndexSet::single(singles[0]) | IndexSet::single(singles[1]) |
                       IndexSet::single(singles[2]);
      bool pairs_distinct = !(pairs[0]->members == pairs[1]->members) &&
                            !(pairs[0]->members == pairs[2]->members) &&
                            !(pairs[1]->members == pairs[2]->members);
      std::vector<ConditionalEvent> members;
      for (int i : target.members.indices()) members.push_back(fam[i]);
      bool shared_antecedent =
          u.implies(members[0].antecedent, members[1].antecedent) &&
          u.implies(members[1].antecedent, members[0].antecedent) &&
          u.implies(members[1].antecedent, members[2].antecedent) &&
          u.implies(members[2].antecedent, members[1].antecedent);
      if (span3 == target.members && pairs_distinct &&
          (logically_independent(u, members) ||
           (shared_antecedent && logically_independent_events(
                                     u, {members[0].consequent, members[1].consequent,
                                         members[2].consequent})))) {
        std::sort(singles.begin(), singles.end());
        auto x = [&](int i) {
          return *inst.problem.assessment.find(
              {PrevisionSymbol::Kind::Conj, IndexSet::single(i), false});
        };
        auto xpair = [&](int i, int j) {
          return *inst.problem.assessment.find(
              {PrevisionSymbol::Kind::Conj, IndexSet::single(i) | IndexSet::single(j), false});
        };
        ThreeEventAssessment a{x(singles[0]), x(singles[1]), x(singles[2]),
                               xpair(singles[0], singles[1]), xpair(singles[0], singles[2]),
                               xpair(singles[1], singles[2]), std::nullopt};
        return ClosedForm{"three-event extension", three_event_extension_bounds(a)};
      }
    }
  }
  return std::nullopt;
}

int cmd_extend(const Options& opt, const std::string& path, std::vector<std::string> on,
               std::string op) {
  ProblemFile file = load_problem(path);
  EngineInstance inst = build_instance(file, opt.max_atoms);
  if (on.empty() && file.query && file.query->kind == "extend") {
    on = file.query->on;
    if (op.empty()) op = file.query->op;
  }
  if (op.empty()) op = "and";
  if (on.empty()) throw InputError("no extension target (use --target or a query)");
  Quantity target = make_quantity(inst, on, op);

  ExtensionResult r;
  try {
    r = extension_interval(inst.problem, target);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  auto closed = closed_form_for(inst, target);

  if (opt.machine()) {
    std::cout << "interval.lo=" << format_rational(r.lo.value) << "\n";
    std::cout << "interval.hi=" << format_rational(r.hi.value) << "\n";
    std::cout << "interval.lo.closed=" << (r.lo.closed ? "true" : "false") << "\n";
    std::cout << "interval.hi.closed=" << (r.hi.closed ? "true" : "false") << "\n";
    if (closed) {
      std::cout << "closedform.lo=" << format_rational(closed->interval.lo) << "\n";
      std::cout << "closedform.hi=" << format_rational(closed->interval.hi) << "\n";
      std::cout << "closedform.agrees="
                << ((closed->interval.lo == r.lo.value && closed->interval.hi == r.hi.value)
                        ? "true"
                        : "false")
                << "\n";
    }
  } else {
    std::cout << "extension interval: " << interval_string(r.lo.value, r.hi.value) << " ~ "
              << approx_interval_string(r.lo.value, r.hi.value) << "\n";
    if (!r.lo.closed || !r.hi.closed) {
      std::cout << "  note: " << (!r.lo.closed ? "lower" : "upper")
                << " endpoint did not re-verify; reported value is an outer bound\n";
    }
    if (closed) {
      std::cout << "closed form (" << closed->name
                << "): " << interval_string(closed->interval.lo, closed->interval.hi)
                << (closed->interval.lo == r.lo.value && closed->interval.hi == r.hi.value
                        ? " (agrees)"
                        : " (DISAGREES)")
                << "\n";
    }
  }
  return 0;
}

int cmd_table(const Options& opt, const std::string& path, std::string op,
              std::vector<std::string> on) {
  ProblemFile file = load_problem(path);
  EngineInstance inst = build_instance(file, opt.max_atoms);
  if (on.empty() && file.query && file.query->kind == "table") {
    on = file.query->on;
    if (op.empty()) op = file.query->op;
  }
  if (op.empty()) op = "and";
  IndexSet members = all_members(*inst.space);
  if (!on.empty()) members = make_quantity(inst, on, op == "qc" ? "and" : op).members;

  CrqTable table;
  if (op == "and") {
    table = conjunction_table(inst.space, members);
  } else if (op == "or") {
    table = disjunction_table(inst.space, members);
  } else if (op == "qc") {
    auto [event, t] = quasi_conjunction(inst.space, members);
    table = std::move(t);
    if (!opt.machine()) {
      std::cout << "QC = " << event.consequent.str() << " given " << event.antecedent.str()
                << "\n";
    }
  } else {
    throw InputError("unknown op: " + op + " (want and|or|qc)");
  }

  std::vector<ConditionalEvent> chosen;
  for (int i : members.indices()) chosen.push_back(inst.space->family[i]);
  bool indep = logically_independent(inst.space->universe, chosen);

  if (opt.machine()) {
    std::cout << "cells=" << inst.space->cells.size() << "\n";
    std::cout << "independent=" << (indep ? "true" : "false") << "\n";
  } else {
    std::cout << "constituents: " << inst.space->cells.size() << "\n";
    std::cout << "logically independent (all-signatures criterion): " << (indep ? "yes" : "no")
              << "\n";
  }
  std::cout << render_table(table);
  return 0;
}

void print_entailment(const Options& opt, const EntailmentVerdict& v,
                      const std::vector<ConditionalEvent>& premises) {
  auto witness_names = [&]() -> std::string {
    if (v.antecedent_implies_consequent) return "antecedent-implies-consequent";
    if (!v.witness) return "-";
    std::string out;
    for (int i : v.witness->indices()) {
      if (!out.empty()) out += ',';
      out += premises[i].name;
    }
    return out;
  };
  if (opt.machine()) {
    std::cout << "p_consistent=" << (v.p_consistent ? "true" : "false") << "\n";
    std::cout << "p_valid=" << (v.p_valid ? "true" : "false") << "\n";
    std::cout << "witness=" << witness_names() << "\n";
    std::cout << "lp_lower_bound=" << (v.lp_lower_bound ? format_rational(*v.lp_lower_bound) : "-")
              << "\n";
  } else {
    std::cout << "premises p-consistent: " << (v.p_consistent ? "yes" : "no") << "\n";
    if (!v.p_consistent) {
      std::cout << "p-valid: no (p-entailment undefined for p-inconsistent premises)\n";
      return;
    }
    std::cout << "p-valid: " << (v.p_valid ? "yes" : "no") << "\n";
    std::cout << "witness: " << witness_names() << "\n";
    if (v.lp_lower_bound) {
      std::cout << "conclusion lower bound at all-ones premises: "
                << format_rational(*v.lp_lower_bound) << " ~ "
                << approx_decimal(*v.lp_lower_bound) << "\n";
    }
  }
}

int cmd_entail(const Options& opt, const std::string& arg) {
  InferenceRule rule;
  if (std::filesystem::exists(arg)) {
    rule = make_rule(load_problem(arg));
  } else if (auto builtin = find_builtin_rule(arg)) {
    rule = *builtin;
  } else {
    throw InputError("no such file or builtin rule: " + arg);
  }
  EntailmentVerdict v = p_entails(rule);
  print_entailment(opt, v, rule.premises);
  return v.p_valid ? 0 : 1;
}

int cmd_rules_run(const Options& opt, const std::string& name, bool all) {
  if (!all && name.empty()) throw InputError("rules run needs a rule name or --all");
  if (!all) {
    auto rule = find_builtin_rule(name);
    if (!rule) throw InputError("unknown rule: " + name);
    EntailmentVerdict v = p_entails(*rule);
    print_entailment(opt, v, rule->premises);
    return v.p_valid ? 0 : 1;
  }
  int ok = 0;
  auto rules = builtin_rules();
  for (const auto& rule : rules) {
    EntailmentVerdict v = p_entails(rule);
    bool match = rule.expected_p_valid && v.p_valid == *rule.expected_p_valid;
    ok += match;
    if (opt.machine()) {
      std::cout << "rule." << rule.name << ".p_valid=" << (v.p_valid ? "true" : "false") << "\n";
      std::cout << "rule." << rule.name << ".expected=" << (match ? "match" : "MISMATCH") << "\n";
    } else {
      std::cout << rule.name << ": " << (v.p_valid ? "p-valid" : "not p-valid")
                << (match ? "" : "  << MISMATCH vs expected") << "\n";
    }
  }
  if (opt.machine()) {
    std::cout << "catalog.matched=" << ok << "/" << rules.size() << "\n";
  } else {
    std::cout << ok << "/" << rules.size() << " expected verdicts reproduced\n";
  }
  return ok == static_cast<int>(rules.size()) ? 0 : 1;
}

int cmd_bounds(const Options& opt, const std::string& kind,
               const std::vector<std::string>& numbers) {
  std::vector<Rational> xs;
  for (const auto& n : numbers) {
    Rational r = parse_rational(n);
    if (!in_unit_interval(r)) throw InputError("value outside [0,1]: " + n);
    xs.push_back(std::move(r));
  }
  auto need = [&](std::size_t k) {
    if (xs.size() != k) {
      throw InputError(kind + " wants " + std::to_string(k) + " numbers, got " +
                       std::to_string(xs.size()));
    }
  };
  auto print_interval = [&](const Interval& iv) {
    if (opt.machine()) {
      std::cout << "lo=" << format_rational(iv.lo) << "\n";
      std::cout << "hi=" << format_rational(iv.hi) << "\n";
    } else {
      std::cout << interval_string(iv.lo, iv.hi) << " ~ " << approx_interval_string(iv.lo, iv.hi)
                << "\n";
    }
    return 0;
  };
  auto print_weights = [&](const LambdaWeights& w) {
    std::string sep;
    if (opt.machine()) std::cout << "lambda=";
    for (const auto& l : w.lambda) {
      std::cout << sep << format_rational(l);
      sep = opt.machine() ? "," : " ";
    }
    std::cout << "\n";
    return 0;
  };

  if (kind == "frechet-and") {
    if (xs.empty()) throw InputError("frechet-and wants at least one number");
    return print_interval(frechet_conjunction_n(xs));
  }
  if (kind == "frechet-or") {
    if (xs.empty()) throw InputError("frechet-or wants at least one number");
    return print_interval(frechet_disjunction_n(xs));
  }
  if (kind == "step") {
    need(2);
    return print_interval(conj_step_bounds(xs[0], xs[1]));
  }
  if (kind == "reverse") {
    need(3);
    bool inside = reverse_region_contains(xs[0], xs[1], xs[2]);
    std::cout << (opt.machine() ? (inside ? "inside=true" : "inside=false")
                                : (inside ? "inside" : "outside"))
              << "\n";
    return inside ? 0 : 1;
  }
  if (kind == "lambda") {
    need(3);
    try {
      return print_weights(lambda_decomposition(xs[0], xs[1], xs[2]));
    } catch (const DomainError& e) {
      std::cout << (opt.machine() ? "error=outside-region" : e.what()) << "\n";
      return 1;
    }
  }
  if (kind == "three-event") {
    need(7);
    ThreeEventAssessment a{xs[0], xs[1], xs[2], xs[3], xs[4], xs[5], xs[6]};
    bool inside = three_event_region_check(a);
    std::cout << (opt.machine() ? (inside ? "inside=true" : "inside=false")
                                : (inside ? "coherent" : "not coherent"))
              << "\n";
    return inside ? 0 : 1;
  }
  if (kind == "three-event-extend") {
    need(6);
    ThreeEventAssessment a{xs[0], xs[1], xs[2], xs[3], xs[4], xs[5], std::nullopt};
    try {
      return print_interval(three_event_extension_bounds(a));
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
  }
  if (kind == "sigma-prime") {
    need(7);
    ThreeEventAssessment a{xs[0], xs[1], xs[2], xs[3], xs[4], xs[5], xs[6]};
    try {
      return print_weights(sigma_prime_solution(a));
    } catch (const DomainError& e) {
      std::cout << (opt.machine() ? "error=outside-region" : e.what()) << "\n";
      return 1;
    }
  }
  throw InputError("unknown bounds kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence-based reasoning over conditional events"};
  app.set_help_all_flag("--help-all");
  Options opt;
  app.add_option("--format", opt.format, "human|machine")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--max-atoms", opt.max_atoms, "world-enumeration guard")
      ->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  auto* coherence = app.add_subcommand("coherence", "check or extend an assessment");
  coherence->require_subcommand(1);
  std::string check_file;
  auto* check = coherence->add_subcommand("check", "run the coherence procedure");
  check->add_option("file", check_file, "problem file")->required();

  std::string extend_file, extend_op;
  std::vector<std::string> extend_on;
  auto* extend = coherence->add_subcommand("extend", "coherent extension interval");
  extend->add_option("file", extend_file, "problem file")->required();
  extend->add_option("--target", extend_on, "target conditional names");
  extend->add_option("--op", extend_op, "and|or")->check(CLI::IsMember({"and", "or"}));

  std::string table_file, table_op;
  std::vector<std::string> table_on;
  auto* table = app.add_subcommand("table", "print a constituent/value table");
  table->add_option("file", table_file, "problem file")->required();
  table->add_option("--op", table_op, "and|or|qc")->check(CLI::IsMember({"and", "or", "qc"}));
  table->add_option("--subset", table_on, "conditional names");

  std::string entail_arg;
  auto* entail = app.add_subcommand("entail", "p-consistency and p-entailment");
  entail->add_option("file-or-rule", entail_arg, "problem file or builtin rule name")->required();

  auto* rules = app.add_subcommand("rules", "builtin rule catalog");
  rules->require_subcommand(1);
  std::string rule_name;
  bool rules_all = false;
  auto* rules_run = rules->add_subcommand("run", "run catalog rules");
  rules_run->add_option("name", rule_name, "rule name");
  rules_run->add_flag("--all", rules_all, "run the whole catalog");

  std::string bounds_kind;
  std::vector<std::string> bounds_numbers;
  auto* bounds = app.add_subcommand("bounds", "closed-form bounds and regions");
  bounds->add_option("kind", bounds_kind,
                     "frechet-and|frechet-or|step|reverse|lambda|three-event|"
                     "three-event-extend|sigma-prime")
      ->required();
  bounds->add_option("numbers", bounds_numbers, "rationals or decimals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(opt, check_file);
    if (extend->parsed()) return cmd_extend(opt, extend_file, extend_on, extend_op);
    if (table->parsed()) return cmd_table(opt, table_file, table_op, table_on);
    if (entail->parsed()) return cmd_entail(opt, entail_arg);
    if (rules_run->parsed()) return cmd_rules_run(opt, rule_name, rules_all);
    if (bounds->parsed()) return cmd_bounds(opt, bounds_kind, bounds_numbers);
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
