#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "concord/logic.hpp"
#include "concord/rational.hpp"

namespace concord {

using SpacePtr = std::shared_ptr<const ConstituentSpace>;

inline SpacePtr make_space(Universe universe, std::vector<ConditionalEvent> family) {
  return std::make_shared<const ConstituentSpace>(build_space(std::move(universe), std::move(family)));
}

// Prevision placeholder: x_S for a conjunction over subset S, y_S for a
// disjunction, qc_S for the quasi conjunction. Singletons print as x1.
// Symbols over the consequent-negated family carry a prime: x'{1,2}.
struct PrevisionSymbol {
  enum class Kind : uint8_t { Conj = 0, Disj = 1, Qc = 2 };
  Kind kind = Kind::Conj;
  IndexSet subset;  // nonempty
  bool negated_family = false;

  bool operator==(const PrevisionSymbol&) const = default;
  bool operator<(const PrevisionSymbol& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (negated_family != o.negated_family) return negated_family < o.negated_family;
    return subset < o.subset;
  }
  std::string str() const;
};

struct CrqValue {
  enum class Tag : uint8_t { Number, Sym, OneMinusSym };
  Tag tag = Tag::Number;
  Rational number;
  PrevisionSymbol sym;

  static CrqValue of(Rational r) { return {Tag::Number, std::move(r), {}}; }
  static CrqValue symbol(PrevisionSymbol s) { return {Tag::Sym, {}, s}; }
  static CrqValue one_minus(PrevisionSymbol s) { return {Tag::OneMinusSym, {}, s}; }
  bool is_number() const { return tag == Tag::Number; }
  std::string str() const;
};

struct MissingSymbolError : DomainError {
  using DomainError::DomainError;
};

// Exact rational values for prevision symbols; all values in [0,1].
class Assessment {
 public:
  void set(const PrevisionSymbol& s, Rational value);
  std::optional<Rational> find(const PrevisionSymbol& s) const;
  const std::map<PrevisionSymbol, Rational>& entries() const { return entries_; }

 private:
  std::map<PrevisionSymbol, Rational> entries_;
};

// Value table of a conditional random quantity over the constituents of a
// space. `members` selects the subfamily the quantity spans; symbols use the
// space's global positions, so tables over different subfamilies of one
// space share symbol meanings.
struct CrqTable {
  enum class Op : uint8_t { Conj, Disj, Qc };
  SpacePtr space;
  Op op = Op::Conj;
  IndexSet members;
  bool negated_family = false;
  std::vector<CrqValue> entries;  // parallel to space->cells

  bool numeric() const;
  const Rational& number_at(std::size_t cell) const { return entries[cell].number; }
};

IndexSet all_members(const ConstituentSpace& space);

// z_h per the conjunction table: 1 when every member true, 0 when some
// member false, x_{S} when the void members form S and the rest are true.
CrqTable conjunction_table(SpacePtr space, IndexSet members, bool negated_family = false);
CrqTable conjunction_table(SpacePtr space);

// w_h: 1 when some member true, 0 when all false, y_{S} otherwise.
CrqTable disjunction_table(SpacePtr space, IndexSet members, bool negated_family = false);
CrqTable disjunction_table(SpacePtr space);

// The quasi conjunction as a plain conditional event together with its
// table: 1 when no member false and some member true, 0 when some member
// false, its prevision when all void.
std::pair<ConditionalEvent, CrqTable> quasi_conjunction(SpacePtr space, IndexSet members);
std::pair<ConditionalEvent, CrqTable> quasi_conjunction(SpacePtr space);

// 1 - table, entrywise; symbols become formal complements.
CrqTable negate(const CrqTable& t);

// Resolves every symbolic entry; throws MissingSymbolError naming the first
// absent symbol.
CrqTable instantiate(const CrqTable& t, const Assessment& a);

// a <= b on every constituent implying the disjunction of all antecedents of
// both quantities. Both tables must be numeric and share one space.
bool dominates(const CrqTable& a, const CrqTable& b);

// Verifies both De Morgan directions entrywise after instantiation:
// 1 - D(F) = C(~F) and 1 - C(F) = D(~F). `assessment` supplies the x_S/y_S
// values for F; values for the negated family are derived by duality, or
// validated against `negated_supply` when given (throws DomainError on an
// inconsistent supply).
bool check_de_morgan(SpacePtr space, const Assessment& assessment,
                     const Assessment* negated_supply = nullptr);

// Compound prevision: mu with z_{n+1} = mu * z_n. Undefined when z_n = 0.
Rational iterated_prevision(const Rational& z_n, const Rational& z_n_plus_1);

// Canonical rendering: one row per constituent, "C_h | <signature> | <value>",
// signature as T/F/V letters, C0 labeled C_0.
std::string render_table(const CrqTable& t);

}  // namespace concord
