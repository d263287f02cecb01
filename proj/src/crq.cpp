#include "concord/crq.hpp"

#include <algorithm>

namespace concord {

std::string PrevisionSymbol::str() const {
  std::string out;
  switch (kind) {
    case Kind::Conj: out = "x"; break;
    case Kind::Disj: out = "y"; break;
    case Kind::Qc: out = "qc"; break;
  }
  if (negated_family) out += '\'';
  auto idx = subset.indices();
  if (idx.size() == 1) {
    out += std::to_string(idx.front() + 1);
  } else {
    out += subset.str();
  }
  return out;
}

std::string CrqValue::str() const {
  switch (tag) {
    case Tag::Number: return format_rational(number);
    case Tag::Sym: return sym.str();
    case Tag::OneMinusSym: return "1-" + sym.str();
  }
  return {};
}

void Assessment::set(const PrevisionSymbol& s, Rational value) {
  if (s.subset.empty()) throw DomainError("empty symbol subset");
  if (!in_unit_interval(value)) {
    throw DomainError("value for " + s.str() + " outside [0,1]: " + format_rational(value));
  }
  entries_[s] = std::move(value);
}

std::optional<Rational> Assessment::find(const PrevisionSymbol& s) const {
  auto it = entries_.find(s);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool CrqTable::numeric() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CrqValue& v) { return v.is_number(); });
}

IndexSet all_members(const ConstituentSpace& space) {
  return IndexSet::full(space.family_size());
}

namespace {

// Effective tripartition of a cell restricted to `members`, with True/False
// swapped when the table ranges over the consequent-negated family.
struct Tripartition {
  IndexSet t, f, v;
};

Tripartition restricted(const Constituent& cell, IndexSet members, bool negated) {
  Tripartition tp;
  tp.t = (negated ? cell.sdoubleprime : cell.sprime) & members;
  tp.f = (negated ? cell.sprime : cell.sdoubleprime) & members;
  tp.v = cell.striple & members;
  return tp;
}

void require_members(const ConstituentSpace& space, IndexSet members) {
  if (members.empty()) throw DomainError("empty member set");
  if (!members.subset_of(all_members(space))) throw DomainError("member index out of range");
}

}  // namespace

CrqTable conjunction_table(SpacePtr space, IndexSet members, bool negated_family) {
  require_members(*space, members);
  CrqTable t{space, CrqTable::Op::Conj, members, negated_family, {}};
  t.entries.reserve(space->cells.size());
  for (const auto& cell : space->cells) {
    auto tp = restricted(cell, members, negated_family);
    if (!tp.f.empty()) {
      t.entries.push_back(CrqValue::of(0));
    } else if (tp.v.empty()) {
      t.entries.push_back(CrqValue::of(1));
    } else {
      t.entries.push_back(CrqValue::symbol({PrevisionSymbol::Kind::Conj, tp.v, negated_family}));
    }
  }
  return t;
}

CrqTable conjunction_table(SpacePtr space) {
  IndexSet m = all_members(*space);
  return conjunction_table(std::move(space), m);
}

CrqTable disjunction_table(SpacePtr space, IndexSet members, bool negated_family) {
  require_members(*space, members);
  CrqTable t{space, CrqTable::Op::Disj, members, negated_family, {}};
  t.entries.reserve(space->cells.size());
  for (const auto& cell : space->cells) {
    auto tp = restricted(cell, members, negated_family);
    if (!tp.t.empty()) {
      t.entries.push_back(CrqValue::of(1));
    } else if (tp.v.empty()) {
      t.entries.push_back(CrqValue::of(0));
    } else {
      t.entries.push_back(CrqValue::symbol({PrevisionSymbol::Kind::Disj, tp.v, negated_family}));
    }
  }
  return t;
}

CrqTable disjunction_table(SpacePtr space) {
  IndexSet m = all_members(*space);
  return disjunction_table(std::move(space), m);
}

std::pair<ConditionalEvent, CrqTable> quasi_conjunction(SpacePtr space, IndexSet members) {
  require_members(*space, members);
  std::vector<Formula> materials;
  std::vector<Formula> antecedents;
  std::string name = "QC(";
  bool first = true;
  for (int i : members.indices()) {
    const auto& e = space->family[i];
    materials.push_back(~e.antecedent | (e.consequent & e.antecedent));
    antecedents.push_back(e.antecedent);
    if (!first) name += ',';
    name += e.name.empty() ? std::to_string(i + 1) : e.name;
    first = false;
  }
  name += ')';
  ConditionalEvent event{std::move(name), Formula::conjunction(std::move(materials)),
                         Formula::disjunction(std::move(antecedents))};

  CrqTable t{space, CrqTable::Op::Qc, members, false, {}};
  t.entries.reserve(space->cells.size());
  for (const auto& cell : space->cells) {
    auto tp = restricted(cell, members, false);
    if (!tp.f.empty()) {
      t.entries.push_back(CrqValue::of(0));
    } else if (!tp.t.empty()) {
      t.entries.push_back(CrqValue::of(1));
    } else {
      t.entries.push_back(CrqValue::symbol({PrevisionSymbol::Kind::Qc, members, false}));
    }
  }
  return {std::move(event), std::move(t)};
}

std::pair<ConditionalEvent, CrqTable> quasi_conjunction(SpacePtr space) {
  IndexSet m = all_members(*space);
  return quasi_conjunction(std::move(space), m);
}

CrqTable negate(const CrqTable& t) {
  CrqTable out{t.space, t.op, t.members, !t.negated_family, {}};
  out.entries.reserve(t.entries.size());
  for (const auto& v : t.entries) {
    switch (v.tag) {
      case CrqValue::Tag::Number:
        out.entries.push_back(CrqValue::of(Rational(1) - v.number));
        break;
      case CrqValue::Tag::Sym:
        out.entries.push_back(CrqValue::one_minus(v.sym));
        break;
      case CrqValue::Tag::OneMinusSym:
        out.entries.push_back(CrqValue::symbol(v.sym));
        break;
    }
  }
  return out;
}

CrqTable instantiate(const CrqTable& t, const Assessment& a) {
  CrqTable out{t.space, t.op, t.members, t.negated_family, {}};
  out.entries.reserve(t.entries.size());
  for (const auto& v : t.entries) {
    if (v.is_number()) {
      out.entries.push_back(v);
      continue;
    }
    auto value = a.find(v.sym);
    if (!value) throw MissingSymbolError("missing value for symbol " + v.sym.str());
    Rational r = v.tag == CrqValue::Tag::OneMinusSym ? Rational(1) - *value : *value;
    if (!in_unit_interval(r)) {
      throw DomainError("instantiated value outside [0,1] for " + v.sym.str());
    }
    out.entries.push_back(CrqValue::of(std::move(r)));
  }
  return out;
}

bool dominates(const CrqTable& a, const CrqTable& b) {
  if (a.space != b.space) throw DomainError("tables over different constituent spaces");
  if (!a.numeric() || !b.numeric()) throw DomainError("dominance needs instantiated tables");
  IndexSet joint = a.members | b.members;
  for (std::size_t h = 0; h < a.space->cells.size(); ++h) {
    if (!a.space->in_h_disjunction(h, joint)) continue;
    if (a.number_at(h) > b.number_at(h)) return false;
  }
  return true;
}

namespace {

// Duality-derived assessment for tables over the negated family: the
// conjunction of ~F takes 1 - y_S, the disjunction of ~F takes 1 - x_S.
Assessment dual_assessment(const Assessment& a, const Assessment* supplied) {
  Assessment out = a;
  for (const auto& [sym, value] : a.entries()) {
    if (sym.negated_family || sym.kind == PrevisionSymbol::Kind::Qc) continue;
    PrevisionSymbol dual{sym.kind == PrevisionSymbol::Kind::Conj ? PrevisionSymbol::Kind::Disj
                                                                 : PrevisionSymbol::Kind::Conj,
                         sym.subset, true};
    out.set(dual, Rational(1) - value);
  }
  if (supplied) {
    for (const auto& [sym, value] : supplied->entries()) {
      auto derived = out.find(sym);
      if (derived && *derived != value) {
        throw DomainError("inconsistent symbol supply for " + sym.str() + ": " +
                          format_rational(value) + " vs " + format_rational(*derived));
      }
      out.set(sym, value);
    }
  }
  return out;
}

bool tables_equal(const CrqTable& a, const CrqTable& b) {
  for (std::size_t h = 0; h < a.entries.size(); ++h) {
    if (a.number_at(h) != b.number_at(h)) return false;
  }
  return true;
}

}  // namespace

bool check_de_morgan(SpacePtr space, const Assessment& assessment,
                     const Assessment* negated_supply) {
  IndexSet m = all_members(*space);
  Assessment full = dual_assessment(assessment, negated_supply);

  CrqTable lhs1 = instantiate(negate(disjunction_table(space, m)), full);
  CrqTable rhs1 = instantiate(conjunction_table(space, m, /*negated_family=*/true), full);
  CrqTable lhs2 = instantiate(negate(conjunction_table(space, m)), full);
  CrqTable rhs2 = instantiate(disjunction_table(space, m, /*negated_family=*/true), full);

  return tables_equal(lhs1, rhs1) && tables_equal(lhs2, rhs2);
}

Rational iterated_prevision(const Rational& z_n, const Rational& z_n_plus_1) {
  if (!(z_n_plus_1 >= 0 && z_n_plus_1 <= z_n && z_n <= 1)) {
    throw DomainError("iterated prevision needs 0 <= z_{n+1} <= z_n <= 1");
  }
  if (z_n == 0) throw DomainError("iterated prevision undefined: P(C_n) = 0");
  return z_n_plus_1 / z_n;
}

std::string render_table(const CrqTable& t) {
  std::string out;
  std::size_t row = 0;
  for (std::size_t h = 0; h < t.space->cells.size(); ++h) {
    const auto& cell = t.space->cells[h];
    bool is_c0 = t.space->c0 && *t.space->c0 == h;
    out += "C_";
    out += is_c0 ? "0" : std::to_string(++row);
    out += " | ";
    for (Status s : cell.signature) {
      out += s == Status::True ? 'T' : (s == Status::False ? 'F' : 'V');
    }
    out += " | ";
    out += t.entries[h].str();
    out += '\n';
  }
  return out;
}

}  // namespace concord
