#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace concord {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset(offset) {}
  std::size_t offset;
};

// Boolean event expression over named atoms. Immutable tree with shared
// subterms; n-ary And/Or kept flat so printing round-trips.
class Formula {
 public:
  enum class Kind : uint8_t { True, False, Atom, Not, And, Or };

  Formula() : Formula(truth()) {}

  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> parts);
  static Formula disjunction(std::vector<Formula> parts);

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->atom; }
  const std::vector<Formula>& children() const { return node_->children; }

  // Minimal-parenthesis rendering under precedence NOT > AND > OR.
  std::string str() const;

  void collect_atoms(std::set<std::string>* out) const;

 private:
  struct Node {
    Kind kind;
    std::string atom;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Formula operator~(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&(Formula a, Formula b) {
  return Formula::conjunction({std::move(a), std::move(b)});
}
inline Formula operator|(Formula a, Formula b) {
  return Formula::disjunction({std::move(a), std::move(b)});
}

// Grammar (whitespace insignificant):
//   expr   := term ('|' term)*
//   term   := factor ('&' factor)*
//   factor := '~' factor | atom | 'T' | 'F' | '(' expr ')'
//   atom   := [A-Za-z_][A-Za-z0-9_]*
Formula parse_formula(std::string_view text);

}  // namespace concord
