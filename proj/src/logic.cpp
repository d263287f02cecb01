#include "concord/logic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace concord {

std::string IndexSet::str() const {
  std::string out = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  out += '}';
  return out;
}

Universe::Universe(std::vector<std::string> atoms, std::vector<Formula> impossible, int max_atoms)
    : atoms_(std::move(atoms)), impossible_(std::move(impossible)) {
  if (static_cast<int>(atoms_.size()) > max_atoms) {
    throw DomainError("atom count " + std::to_string(atoms_.size()) +
                      " exceeds the enumeration guard (" + std::to_string(max_atoms) + ")");
  }
  {
    std::set<std::string> seen;
    for (const auto& a : atoms_) {
      if (!seen.insert(a).second) throw DomainError("duplicate atom: " + a);
    }
  }
  const World limit = World{1} << atoms_.size();
  for (World w = 0; w < limit; ++w) {
    bool excluded = false;
    for (const auto& f : impossible_) {
      if (evaluate(f, w)) {
        excluded = true;
        break;
      }
    }
    if (!excluded) worlds_.push_back(w);
  }
}

Universe Universe::over(const std::vector<Formula>& formulas, std::vector<Formula> impossible,
                        int max_atoms) {
  std::set<std::string> names;
  for (const auto& f : formulas) f.collect_atoms(&names);
  for (const auto& f : impossible) f.collect_atoms(&names);
  return Universe(std::vector<std::string>(names.begin(), names.end()), std::move(impossible),
                  max_atoms);
}

bool Universe::evaluate(const Formula& f, World w) const {
  switch (f.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom: {
      auto it = std::find(atoms_.begin(), atoms_.end(), f.atom_name());
      if (it == atoms_.end()) throw DomainError("atom not in universe: " + f.atom_name());
      return (w >> (it - atoms_.begin())) & 1u;
    }
    case Formula::Kind::Not:
      return !evaluate(f.children().front(), w);
    case Formula::Kind::And:
      for (const auto& c : f.children())
        if (!evaluate(c, w)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& c : f.children())
        if (evaluate(c, w)) return true;
      return false;
  }
  return false;
}

Status Universe::status(const ConditionalEvent& e, World w) const {
  if (!evaluate(e.antecedent, w)) return Status::Void;
  return evaluate(e.consequent, w) ? Status::True : Status::False;
}

bool Universe::satisfiable(const Formula& f) const {
  for (World w : worlds_)
    if (evaluate(f, w)) return true;
  return false;
}

bool Universe::implies(const Formula& f, const Formula& g) const {
  for (World w : worlds_)
    if (evaluate(f, w) && !evaluate(g, w)) return false;
  return true;
}

ConstituentSpace build_space(Universe universe, std::vector<ConditionalEvent> family) {
  if (family.empty()) throw DomainError("empty family");
  for (const auto& e : family) {
    if (!universe.satisfiable(e.antecedent)) {
      throw DomainError("impossible antecedent for " +
                        (e.name.empty() ? e.consequent.str() + " | " + e.antecedent.str() : e.name));
    }
  }

  std::map<std::vector<Status>, std::vector<World>> groups;
  for (World w : universe.worlds()) {
    std::vector<Status> sig;
    sig.reserve(family.size());
    for (const auto& e : family) sig.push_back(universe.status(e, w));
    groups[sig].push_back(w);
  }

  ConstituentSpace space{std::move(universe), std::move(family), {}, std::nullopt};
  for (auto& [sig, worlds] : groups) {
    Constituent c;
    c.signature = sig;
    c.worlds = std::move(worlds);
    for (std::size_t i = 0; i < sig.size(); ++i) {
      switch (sig[i]) {
        case Status::True: c.sprime = c.sprime.with(static_cast<int>(i)); break;
        case Status::False: c.sdoubleprime = c.sdoubleprime.with(static_cast<int>(i)); break;
        case Status::Void: c.striple = c.striple.with(static_cast<int>(i)); break;
      }
    }
    if (c.all_void()) space.c0 = space.cells.size();
    space.cells.push_back(std::move(c));
  }
  // std::map iterates signatures lexicographically with True < False < Void,
  // so the all-void signature can only be the final cell.
  return space;
}

bool gn_inclusion(const Universe& u, const ConditionalEvent& p, const ConditionalEvent& q) {
  Formula p_true = p.consequent & p.antecedent;
  Formula p_false = ~p.consequent & p.antecedent;
  Formula q_true = q.consequent & q.antecedent;
  Formula q_false = ~q.consequent & q.antecedent;
  return u.implies(p_true, q_true) && u.implies(q_false, p_false);
}

bool logically_independent_events(const Universe& u, const std::vector<Formula>& events) {
  std::set<std::vector<bool>> sigs;
  for (World w : u.worlds()) {
    std::vector<bool> sig;
    sig.reserve(events.size());
    for (const auto& f : events) sig.push_back(u.evaluate(f, w));
    sigs.insert(std::move(sig));
  }
  uint64_t expected = uint64_t{1} << events.size();
  return sigs.size() == expected;
}

bool logically_independent(const Universe& u, const std::vector<ConditionalEvent>& family) {
  std::set<std::vector<Status>> sigs;
  for (World w : u.worlds()) {
    std::vector<Status> sig;
    sig.reserve(family.size());
    for (const auto& e : family) sig.push_back(u.status(e, w));
    sigs.insert(std::move(sig));
  }
  uint64_t expected = 1;
  for (std::size_t i = 0; i < family.size(); ++i) expected *= 3;
  return sigs.size() == expected;
}

}  // namespace concord
