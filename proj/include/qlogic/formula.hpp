#pragma once

// Propositional formulas over named atoms.
//
//   formula := impl
//   impl    := or ("->" impl)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := ("~" | "!") unary | "(" formula ")" | "top" | "bot" | NAME

#include <qlogic/error.hpp>

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlogic {

enum class Connective { kAtom, kTop, kBottom, kAnd, kOr, kWeakNeg, kClassicalNeg, kImplies };

/// Immutable AST; subtrees are shared.
class Formula {
 public:
  static Formula atom(std::string name) { return Formula(Connective::kAtom, std::move(name), {}, {}); }
  static Formula top() { return Formula(Connective::kTop, {}, {}, {}); }
  static Formula bottom() { return Formula(Connective::kBottom, {}, {}, {}); }
  static Formula conj(Formula a, Formula b) { return binary(Connective::kAnd, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return binary(Connective::kOr, std::move(a), std::move(b)); }
  static Formula implies(Formula a, Formula b) { return binary(Connective::kImplies, std::move(a), std::move(b)); }
  static Formula weak_neg(Formula a) { return Formula(Connective::kWeakNeg, {}, a.node_, {}); }
  static Formula classical_neg(Formula a) { return Formula(Connective::kClassicalNeg, {}, a.node_, {}); }

  Connective kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  /// Left operand, or the only operand of a negation.
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.name() != b.name()) return false;
    switch (a.kind()) {
      case Connective::kAtom:
      case Connective::kTop:
      case Connective::kBottom: return true;
      case Connective::kWeakNeg:
      case Connective::kClassicalNeg: return a.lhs() == b.lhs();
      default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
  }

  /// Canonical text with the fewest parentheses that parse back to this tree.
  std::string to_string() const { return print(kImpliesLevel); }

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::shared_ptr<const Node> lhs, rhs;
  };

  static constexpr int kImpliesLevel = 1, kOrLevel = 2, kAndLevel = 3, kUnaryLevel = 4;

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  Formula(Connective kind, std::string name, std::shared_ptr<const Node> lhs, std::shared_ptr<const Node> rhs)
      : node_(std::make_shared<const Node>(Node{kind, std::move(name), std::move(lhs), std::move(rhs)})) {}

  static Formula binary(Connective kind, Formula a, Formula b) {
    return Formula(kind, {}, std::move(a.node_), std::move(b.node_));
  }

  int level() const {
    switch (kind()) {
      case Connective::kImplies: return kImpliesLevel;
      case Connective::kOr: return kOrLevel;
      case Connective::kAnd: return kAndLevel;
      default: return kUnaryLevel;
    }
  }

  /// `context` is the loosest level allowed without parentheses.
  std::string print(int context) const {
    std::string body;
    switch (kind()) {
      case Connective::kAtom: return name();
      case Connective::kTop: return "top";
      case Connective::kBottom: return "bot";
      case Connective::kWeakNeg: return "~" + lhs().print(kUnaryLevel);
      case Connective::kClassicalNeg: return "!" + lhs().print(kUnaryLevel);
      case Connective::kImplies:
        body = lhs().print(kOrLevel) + " -> " + rhs().print(kImpliesLevel);
        break;
      case Connective::kOr:
        body = lhs().print(kOrLevel) + " | " + rhs().print(kAndLevel);
        break;
      case Connective::kAnd:
        body = lhs().print(kAndLevel) + " & " + rhs().print(kUnaryLevel);
        break;
    }
    return level() < context ? "(" + body + ")" : body;
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

struct Token {
  enum Kind { kName, kTop, kBot, kAnd, kOr, kArrow, kTilde, kBang, kLParen, kRParen, kEnd } kind;
  std::string text;
  std::size_t offset;
};

inline std::vector<Token> tokenize(std::string_view text, std::size_t base) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    const std::size_t start = pos;
    const char c = text[pos];
    auto single = [&](Token::Kind k) { out.push_back({k, std::string(1, c), start}); ++pos; };
    switch (c) {
      case '&': single(Token::kAnd); continue;
      case '|': single(Token::kOr); continue;
      case '~': single(Token::kTilde); continue;
      case '!': single(Token::kBang); continue;
      case '(': single(Token::kLParen); continue;
      case ')': single(Token::kRParen); continue;
      case '-':
        if (pos + 1 < text.size() && text[pos + 1] == '>') {
          out.push_back({Token::kArrow, "->", start});
          pos += 2;
          continue;
        }
        throw ParseError(base + start, "syntax error: unknown token '-'");
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\''))
        ++pos;
      std::string word(text.substr(start, pos - start));
      Token::Kind k = word == "top" ? Token::kTop : word == "bot" ? Token::kBot : Token::kName;
      out.push_back({k, std::move(word), start});
      continue;
    }
    throw ParseError(base + start, std::string("syntax error: unknown token '") + c + "'");
  }
  out.push_back({Token::kEnd, "", text.size()});
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::vector<Token> tokens, std::size_t base) : tokens_(std::move(tokens)), base_(base) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Token::kEnd) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(base_ + peek().offset, "syntax error: " + what);
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Token::kArrow)) return Formula::implies(std::move(lhs), implication());
    return lhs;
  }
  Formula disjunction() {
    Formula acc = conjunction();
    while (accept(Token::kOr)) acc = Formula::disj(std::move(acc), conjunction());
    return acc;
  }
  Formula conjunction() {
    Formula acc = unary();
    while (accept(Token::kAnd)) acc = Formula::conj(std::move(acc), unary());
    return acc;
  }
  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::kTilde: ++pos_; return Formula::weak_neg(unary());
      case Token::kBang: ++pos_; return Formula::classical_neg(unary());
      case Token::kTop: ++pos_; return Formula::top();
      case Token::kBot: ++pos_; return Formula::bottom();
      case Token::kName: ++pos_; return Formula::atom(t.text);
      case Token::kLParen: {
        ++pos_;
        Formula inner = implication();
        if (!accept(Token::kRParen)) fail("expected ')'");
        return inner;
      }
      case Token::kEnd: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// `base_offset` shifts error offsets when the formula is part of a longer line.
inline Formula parse_formula(std::string_view text, std::size_t base_offset = 0) {
  return detail::FormulaParser(detail::tokenize(text, base_offset), base_offset).parse();
}

}  // namespace qlogic
