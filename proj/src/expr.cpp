#include "minkdiff/expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace minkdiff {

class ExprParser {
 public:
  ExprParser(std::string_view text, Expr& out) : text_(text), out_(out) {}

  void run() {
    out_.root_ = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

 private:
  using Op = Expr::Op;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression error at position " + std::to_string(pos_) +
                                " in \"" + std::string(text_) + "\": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  int add(Expr::Node n) {
    out_.nodes_.push_back(n);
    return static_cast<int>(out_.nodes_.size()) - 1;
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      if (eat('+'))
        lhs = add({Op::Add, 0, -1, lhs, parse_term()});
      else if (eat('-'))
        lhs = add({Op::Sub, 0, -1, lhs, parse_term()});
      else
        return lhs;
    }
  }

  int parse_term() {
    int lhs = parse_factor();
    for (;;) {
      if (eat('*'))
        lhs = add({Op::Mul, 0, -1, lhs, parse_factor()});
      else if (eat('/'))
        lhs = add({Op::Div, 0, -1, lhs, parse_factor()});
      else
        return lhs;
    }
  }

  int parse_factor() {
    int base = parse_unary();
    if (eat('^')) return add({Op::Pow, 0, -1, base, parse_factor()});
    return base;
  }

  int parse_unary() {
    if (eat('-')) return add({Op::Neg, 0, -1, parse_unary(), -1});
    if (eat('+')) return parse_unary();
    return parse_primary();
  }

  int parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    if (eat('(')) {
      int e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  int parse_number() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    try {
      return add({Op::Const, std::stod(std::string(text_.substr(start, pos_ - start))), -1, -1, -1});
    } catch (const std::exception&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  int parse_ident() {
    size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));

    if (peek() == '(') {
      static const std::pair<const char*, Op> fns[] = {
          {"sin", Op::Sin}, {"cos", Op::Cos},   {"tan", Op::Tan},  {"exp", Op::Exp},
          {"log", Op::Log}, {"sqrt", Op::Sqrt}, {"abs", Op::Abs},  {"tanh", Op::Tanh}};
      for (auto& [fn, op] : fns) {
        if (name == fn) {
          eat('(');
          int a = parse_expr();
          if (!eat(')')) fail("expected ')' after " + name);
          return add({op, 0, -1, a, -1});
        }
      }
      if (name == "pow") {
        eat('(');
        int a = parse_expr();
        if (!eat(',')) fail("pow expects two arguments");
        int b = parse_expr();
        if (!eat(')')) fail("expected ')' after pow");
        return add({Op::Pow, 0, -1, a, b});
      }
      pos_ = start;
      fail("unknown function '" + name + "'");
    }

    if (name == "pi") return add({Op::Const, M_PI, -1, -1, -1});
    auto it = std::find(out_.vars_.begin(), out_.vars_.end(), name);
    if (it == out_.vars_.end()) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    return add({Op::Var, 0, static_cast<int>(it - out_.vars_.begin()), -1, -1});
  }

  std::string_view text_;
  Expr& out_;
  size_t pos_ = 0;
};

Expr Expr::parse(std::string_view text, std::vector<std::string> variables) {
  Expr e;
  e.vars_ = std::move(variables);
  e.text_ = std::string(text);
  ExprParser(text, e).run();
  return e;
}

double Expr::operator()(std::span<const double> vars) const {
  return eval_node<double>(root_, vars);
}

}  // namespace minkdiff
