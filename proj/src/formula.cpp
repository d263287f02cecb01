#include "concord/formula.hpp"

#include <cctype>
#include <utility>

namespace concord {

Formula Formula::truth() {
  static const auto node = std::make_shared<const Node>(Node{Kind::True, {}, {}});
  return Formula(node);
}

Formula Formula::falsity() {
  static const auto node = std::make_shared<const Node>(Node{Kind::False, {}, {}});
  return Formula(node);
}

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}}));
}

Formula Formula::conjunction(std::vector<Formula> parts) {
  if (parts.empty()) return truth();
  if (parts.size() == 1) return parts.front();
  std::vector<Formula> flat;
  for (auto& p : parts) {
    if (p.kind() == Kind::And) {
      for (const auto& c : p.children()) flat.push_back(c);
    } else {
      flat.push_back(std::move(p));
    }
  }
  return Formula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(flat)}));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
  if (parts.empty()) return falsity();
  if (parts.size() == 1) return parts.front();
  std::vector<Formula> flat;
  for (auto& p : parts) {
    if (p.kind() == Kind::Or) {
      for (const auto& c : p.children()) flat.push_back(c);
    } else {
      flat.push_back(std::move(p));
    }
  }
  return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(flat)}));
}

void Formula::collect_atoms(std::set<std::string>* out) const {
  switch (kind()) {
    case Kind::Atom:
      out->insert(atom_name());
      break;
    case Kind::Not:
    case Kind::And:
    case Kind::Or:
      for (const auto& c : children()) c.collect_atoms(out);
      break;
    default:
      break;
  }
}

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;  // Not, atoms, constants never need parens inside
  }
}

void print(const Formula& f, int parent_prec, std::string* out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < parent_prec;
  if (parens) out->push_back('(');
  switch (f.kind()) {
    case Formula::Kind::True:
      out->push_back('T');
      break;
    case Formula::Kind::False:
      out->push_back('F');
      break;
    case Formula::Kind::Atom:
      out->append(f.atom_name());
      break;
    case Formula::Kind::Not:
      out->push_back('~');
      print(f.children().front(), 3, out);
      break;
    case Formula::Kind::And:
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out->append(" & ");
        print(f.children()[i], 2, out);
      }
      break;
    case Formula::Kind::Or:
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out->append(" | ");
        print(f.children()[i], 1, out);
      }
      break;
  }
  if (parens) out->push_back(')');
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    Formula f = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected input", pos_);
    return f;
  }

 private:
  Formula expr() {
    std::vector<Formula> terms;
    terms.push_back(term());
    while (peek() == '|') {
      ++pos_;
      terms.push_back(term());
    }
    return Formula::disjunction(std::move(terms));
  }

  Formula term() {
    std::vector<Formula> factors;
    factors.push_back(factor());
    while (peek() == '&') {
      ++pos_;
      factors.push_back(factor());
    }
    return Formula::conjunction(std::move(factors));
  }

  Formula factor() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::negation(factor());
    }
    if (c == '(') {
      ++pos_;
      Formula f = expr();
      skip_ws();
      if (pos_ == text_.size() || text_[pos_] != ')')
        throw ParseError("expected ')'", pos_);
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "T") return Formula::truth();
      if (name == "F") return Formula::falsity();
      return Formula::atom(std::move(name));
    }
    throw ParseError("unexpected character", pos_);
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Formula::str() const {
  std::string out;
  print(*this, 0, &out);
  return out;
}

Formula parse_formula(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw ParseError("empty input", i);
  return Parser(text).run();
}

}  // namespace concord
