#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "concord/formula.hpp"

namespace concord {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Total truth assignment, one bit per universe atom.
using World = uint32_t;

// Subset of family positions (0-based bits; printed 1-based to match the
// usual subscript convention).
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(uint32_t bits) : bits_(bits) {}

  static constexpr IndexSet single(int i) { return IndexSet(uint32_t{1} << i); }
  static constexpr IndexSet full(int n) {
    return IndexSet(n >= 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1);
  }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcount(bits_); }
  constexpr uint32_t bits() const { return bits_; }

  constexpr IndexSet with(int i) const { return IndexSet(bits_ | (uint32_t{1} << i)); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet minus(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr bool operator==(const IndexSet&) const = default;
  constexpr bool operator<(IndexSet o) const { return bits_ < o.bits_; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  // "{1,3}" (1-based), "{}" when empty.
  std::string str() const;

 private:
  uint32_t bits_ = 0;
};

// E|H: true on EH, false on ~E H, void on ~H.
struct ConditionalEvent {
  std::string name;
  Formula consequent;
  Formula antecedent;
};

enum class Status : uint8_t { True = 0, False = 1, Void = 2 };

// Declared atoms plus logical constraints (formulas asserted impossible).
// Worlds violating a constraint are discarded up front.
class Universe {
 public:
  Universe(std::vector<std::string> atoms, std::vector<Formula> impossible = {},
           int max_atoms = kDefaultMaxAtoms);

  // Atom set collected from the given formulas, sorted by name.
  static Universe over(const std::vector<Formula>& formulas,
                       std::vector<Formula> impossible = {},
                       int max_atoms = kDefaultMaxAtoms);

  static constexpr int kDefaultMaxAtoms = 16;

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<World>& worlds() const { return worlds_; }

  bool evaluate(const Formula& f, World w) const;
  Status status(const ConditionalEvent& e, World w) const;

  bool satisfiable(const Formula& f) const;
  // No admissible world satisfies f & ~g.
  bool implies(const Formula& f, const Formula& g) const;

 private:
  std::vector<std::string> atoms_;
  std::vector<Formula> impossible_;
  std::vector<World> worlds_;
};

// One cell of the partition generated by a family of conditional events:
// worlds sharing the same three-valued signature.
struct Constituent {
  std::vector<Status> signature;
  std::vector<World> worlds;
  IndexSet sprime;        // {i : C_h in E_i H_i}
  IndexSet sdoubleprime;  // {i : C_h in ~E_i H_i}
  IndexSet striple;       // {i : C_h in ~H_i}
  bool all_void() const { return sprime.empty() && sdoubleprime.empty(); }
};

// Constituents sorted lexicographically by signature with True < False <
// Void, so the all-void cell C0 (when realized) is always last.
struct ConstituentSpace {
  Universe universe;
  std::vector<ConditionalEvent> family;
  std::vector<Constituent> cells;
  std::optional<std::size_t> c0;

  int family_size() const { return static_cast<int>(family.size()); }
  // Cells whose worlds imply the disjunction of the antecedents of the
  // members in `members` (i.e. not every member void there).
  bool in_h_disjunction(std::size_t cell, IndexSet members) const {
    return (cells[cell].striple & members) != members;
  }
};

// Throws DomainError if the family is empty or some antecedent is impossible
// under the universe's constraints.
ConstituentSpace build_space(Universe universe, std::vector<ConditionalEvent> family);

// Goodman-Nguyen inclusion: AH in BK and ~B K in ~A H over admissible worlds.
bool gn_inclusion(const Universe& u, const ConditionalEvent& p, const ConditionalEvent& q);

// Plain events: all 2^n truth signatures realized.
bool logically_independent_events(const Universe& u, const std::vector<Formula>& events);
// Conditional events: all 3^n three-valued signatures realized.
bool logically_independent(const Universe& u, const std::vector<ConditionalEvent>& family);

}  // namespace concord
