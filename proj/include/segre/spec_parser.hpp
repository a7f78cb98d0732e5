#pragma once
/*
 * Recursive-descent parser for the variety-spec language.
 *
 *   expr := term { "*" term }
 *   term := "P(" nat ")" | "Q(" nat "," ("split"|"aniso") ")"
 *         | "SB(" nat ")" | "Inv(" nat ")" | "(" expr ")"
 *
 * '*' is left-associative, whitespace is insignificant. Parameter
 * bounds: n <= 20 for the exponential families SB and Inv (with n >= 1),
 * dimension <= 64 for P and Q. Errors carry the source offset.
 */

#include <segre/varieties.hpp>

#include <cctype>
#include <memory>
#include <string_view>

namespace segre {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset),
        message_(message) {}

  size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }

private:
  size_t offset_;
  std::string message_;
};

struct VarietySpecAST;
using AstPtr = std::shared_ptr<const VarietySpecAST>;

struct VarietySpecAST {
  enum class Kind { P, Q, SB, Inv, Product };

  Kind kind = Kind::P;
  unsigned param = 0;        // numeric parameter of a leaf
  bool anisotropic = false;  // Q only
  AstPtr left, right;        // Product only
  size_t begin = 0, end = 0;  // source span [begin, end)
};

inline AstPtr make_leaf(VarietySpecAST::Kind kind, unsigned param,
                        bool anisotropic = false, size_t begin = 0,
                        size_t end = 0) {
  auto node = std::make_shared<VarietySpecAST>();
  node->kind = kind;
  node->param = param;
  node->anisotropic = anisotropic;
  node->begin = begin;
  node->end = end;
  return node;
}

inline AstPtr make_product(AstPtr left, AstPtr right) {
  auto node = std::make_shared<VarietySpecAST>();
  node->kind = VarietySpecAST::Kind::Product;
  node->begin = left->begin;
  node->end = right->end;
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

/// Structural equality; source spans are ignored.
inline bool ast_equal(const AstPtr& a, const AstPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  if (a->kind == VarietySpecAST::Kind::Product)
    return ast_equal(a->left, b->left) && ast_equal(a->right, b->right);
  return a->param == b->param &&
         (a->kind != VarietySpecAST::Kind::Q ||
          a->anisotropic == b->anisotropic);
}

/// Canonical printing: reparsing the result reproduces the tree. The
/// right factor of a product is parenthesized when it is itself a
/// product ('*' parses left-associatively).
inline std::string to_string(const AstPtr& ast) {
  switch (ast->kind) {
    case VarietySpecAST::Kind::P:
      return "P(" + std::to_string(ast->param) + ")";
    case VarietySpecAST::Kind::Q:
      return "Q(" + std::to_string(ast->param) +
             (ast->anisotropic ? ",aniso)" : ",split)");
    case VarietySpecAST::Kind::SB:
      return "SB(" + std::to_string(ast->param) + ")";
    case VarietySpecAST::Kind::Inv:
      return "Inv(" + std::to_string(ast->param) + ")";
    case VarietySpecAST::Kind::Product: {
      std::string left = to_string(ast->left);
      std::string right = to_string(ast->right);
      if (ast->right->kind == VarietySpecAST::Kind::Product)
        right = "(" + right + ")";
      return left + " * " + right;
    }
  }
  throw std::logic_error("to_string: unreachable");
}

namespace detail {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  AstPtr parse() {
    AstPtr ast = parse_expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("syntax error: unexpected trailing input", pos_);
    return ast;
  }

private:
  AstPtr parse_expr() {
    AstPtr node = parse_term();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        node = make_product(std::move(node), parse_term());
      } else {
        return node;
      }
    }
  }

  AstPtr parse_term() {
    skip_ws();
    size_t begin = pos_;
    if (pos_ >= text_.size())
      throw ParseError("syntax error: expected a variety term", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      AstPtr inner = parse_expr();
      expect(')');
      return inner;
    }
    std::string head;
    while (pos_ < text_.size() && std::isalpha(
               static_cast<unsigned char>(text_[pos_])))
      head += text_[pos_++];
    if (head == "P" || head == "Q" || head == "SB" || head == "Inv")
      return parse_leaf(head, begin);
    throw ParseError("syntax error: expected P, Q, SB, Inv or '('", begin);
  }

  AstPtr parse_leaf(const std::string& head, size_t begin) {
    expect('(');
    unsigned param = parse_nat();
    using Kind = VarietySpecAST::Kind;
    if (head == "P" || head == "Q") {
      if (param > 64)
        throw ParseError("parameter out of bounds: dimension must be <= 64",
                         last_number_offset_);
    } else {
      if (param < 1 || param > 20)
        throw ParseError(
            "parameter out of bounds: " + head + " needs 1 <= n <= 20",
            last_number_offset_);
    }
    bool aniso = false;
    if (head == "Q") {
      expect(',');
      skip_ws();
      size_t at = pos_;
      std::string word;
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_])))
        word += text_[pos_++];
      if (word == "aniso")
        aniso = true;
      else if (word != "split")
        throw ParseError("syntax error: expected 'split' or 'aniso'", at);
    }
    expect(')');
    Kind kind = head == "P"    ? Kind::P
                : head == "Q"  ? Kind::Q
                : head == "SB" ? Kind::SB
                               : Kind::Inv;
    return make_leaf(kind, param, aniso, begin, pos_);
  }

  unsigned parse_nat() {
    skip_ws();
    last_number_offset_ = pos_;
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("syntax error: expected a number", pos_);
    unsigned long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000)
        throw ParseError("parameter out of bounds: number too large",
                         last_number_offset_);
      ++pos_;
    }
    return static_cast<unsigned>(value);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("syntax error: expected '") + c + "'",
                       pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  size_t last_number_offset_ = 0;
};

}  // namespace detail

inline AstPtr parse_variety_spec(std::string_view text) {
  return detail::SpecParser(text).parse();
}

/// Instantiate the catalogue model a spec tree describes.
inline VarietyModel build_model(const AstPtr& ast) {
  switch (ast->kind) {
    case VarietySpecAST::Kind::P:
      return projective_space(ast->param);
    case VarietySpecAST::Kind::Q:
      return quadric(ast->param, ast->anisotropic);
    case VarietySpecAST::Kind::SB:
      return severi_brauer(ast->param);
    case VarietySpecAST::Kind::Inv:
      return involution_variety(ast->param);
    case VarietySpecAST::Kind::Product:
      return product(build_model(ast->left), build_model(ast->right));
  }
  throw std::logic_error("build_model: unreachable");
}

}  // namespace segre
