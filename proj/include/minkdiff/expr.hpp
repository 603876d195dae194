#pragma once

// Small expression language for custom gauges, chart components, scalar
// fields and width-body perturbations. Grammar:
//
//   expr   = term (('+' | '-') term)*
//   term   = factor (('*' | '/') factor)*
//   factor = unary ('^' factor)?                  (right associative)
//   unary  = ('-' | '+')* primary
//   primary= number | var | fn '(' expr (',' expr)* ')' | '(' expr ')'
//
// Functions: sin cos tan exp log sqrt abs tanh pow. Evaluation is templated
// over the scalar type; Jet<N> carries value, gradient and Hessian so custom
// inputs get first and second derivatives without finite differencing.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minkdiff {

template <int N>
struct Jet {
  double v = 0;
  Eigen::Matrix<double, N, 1> g = Eigen::Matrix<double, N, 1>::Zero();
  Eigen::Matrix<double, N, N> h = Eigen::Matrix<double, N, N>::Zero();

  Jet() = default;
  Jet(double value) : v(value) {}  // NOLINT: implicit constant lift
  static Jet variable(double value, int index) {
    Jet j(value);
    j.g[index] = 1.0;
    return j;
  }
};

template <int N>
Jet<N> operator+(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v + b.v;
  r.g = a.g + b.g;
  r.h = a.h + b.h;
  return r;
}

template <int N>
Jet<N> operator-(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v - b.v;
  r.g = a.g - b.g;
  r.h = a.h - b.h;
  return r;
}

template <int N>
Jet<N> operator-(const Jet<N>& a) {
  Jet<N> r;
  r.v = -a.v;
  r.g = -a.g;
  r.h = -a.h;
  return r;
}

template <int N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  r.v = a.v * b.v;
  r.g = a.g * b.v + b.g * a.v;
  r.h = a.h * b.v + b.h * a.v + a.g * b.g.transpose() + b.g * a.g.transpose();
  return r;
}

template <int N>
Jet<N> operator*(double s, const Jet<N>& a) {
  Jet<N> r;
  r.v = s * a.v;
  r.g = s * a.g;
  r.h = s * a.h;
  return r;
}

template <int N>
Jet<N> operator*(const Jet<N>& a, double s) {
  return s * a;
}

// f(u) composed with a jet: needs f, f', f''.
template <int N>
Jet<N> chain(const Jet<N>& u, double f, double df, double ddf) {
  Jet<N> r;
  r.v = f;
  r.g = df * u.g;
  r.h = df * u.h + ddf * (u.g * u.g.transpose());
  return r;
}

template <int N>
Jet<N> inverse(const Jet<N>& u) {
  double iv = 1.0 / u.v;
  return chain(u, iv, -iv * iv, 2.0 * iv * iv * iv);
}

template <int N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
  return a * inverse(b);
}

template <int N>
Jet<N> sin(const Jet<N>& u) {
  return chain(u, std::sin(u.v), std::cos(u.v), -std::sin(u.v));
}
template <int N>
Jet<N> cos(const Jet<N>& u) {
  return chain(u, std::cos(u.v), -std::sin(u.v), -std::cos(u.v));
}
template <int N>
Jet<N> tan(const Jet<N>& u) {
  double t = std::tan(u.v), s = 1.0 + t * t;
  return chain(u, t, s, 2.0 * t * s);
}
template <int N>
Jet<N> exp(const Jet<N>& u) {
  double e = std::exp(u.v);
  return chain(u, e, e, e);
}
template <int N>
Jet<N> log(const Jet<N>& u) {
  double iv = 1.0 / u.v;
  return chain(u, std::log(u.v), iv, -iv * iv);
}
template <int N>
Jet<N> sqrt(const Jet<N>& u) {
  double s = std::sqrt(u.v);
  return chain(u, s, 0.5 / s, -0.25 / (s * u.v));
}
template <int N>
Jet<N> tanh(const Jet<N>& u) {
  double t = std::tanh(u.v), s = 1.0 - t * t;
  return chain(u, t, s, -2.0 * t * s);
}
template <int N>
Jet<N> abs(const Jet<N>& u) {
  double s = (u.v >= 0) ? 1.0 : -1.0;
  return chain(u, std::abs(u.v), s, 0.0);
}

// pow with constant exponent is exact at integer powers; the general case
// goes through exp(b log a).
template <int N>
Jet<N> pow(const Jet<N>& a, double p) {
  double f = std::pow(a.v, p);
  double df = p * std::pow(a.v, p - 1);
  double ddf = p * (p - 1) * std::pow(a.v, p - 2);
  return chain(a, f, df, ddf);
}

template <int N>
Jet<N> pow(const Jet<N>& a, const Jet<N>& b) {
  if (b.g.isZero(0.0) && b.h.isZero(0.0)) return pow(a, b.v);
  return exp(b * log(a));
}

class Expr {
 public:
  Expr() = default;

  /// Parses text against a fixed variable list; unknown identifiers are an
  /// error. Throws std::invalid_argument with the offending position.
  static Expr parse(std::string_view text, std::vector<std::string> variables);

  double operator()(std::span<const double> vars) const;

  template <int N>
  Jet<N> eval(std::span<const Jet<N>> vars) const {
    return eval_node<Jet<N>>(root_, vars);
  }

  bool empty() const { return nodes_.empty(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& text() const { return text_; }

 private:
  enum class Op : uint8_t {
    Const, Var, Neg, Add, Sub, Mul, Div, Pow,
    Sin, Cos, Tan, Exp, Log, Sqrt, Abs, Tanh
  };
  struct Node {
    Op op;
    double value = 0;  // Const
    int index = -1;    // Var
    int a = -1, b = -1;
  };

  template <class T>
  T eval_node(int i, std::span<const T> vars) const {
    using std::abs;
    using std::cos;
    using std::exp;
    using std::log;
    using std::pow;
    using std::sin;
    using std::sqrt;
    using std::tan;
    using std::tanh;
    const Node& n = nodes_[static_cast<size_t>(i)];
    switch (n.op) {
      case Op::Const: return T(n.value);
      case Op::Var: return vars[static_cast<size_t>(n.index)];
      case Op::Neg: return -eval_node<T>(n.a, vars);
      case Op::Add: return eval_node<T>(n.a, vars) + eval_node<T>(n.b, vars);
      case Op::Sub: return eval_node<T>(n.a, vars) - eval_node<T>(n.b, vars);
      case Op::Mul: return eval_node<T>(n.a, vars) * eval_node<T>(n.b, vars);
      case Op::Div: return eval_node<T>(n.a, vars) / eval_node<T>(n.b, vars);
      case Op::Pow: return pow(eval_node<T>(n.a, vars), eval_node<T>(n.b, vars));
      case Op::Sin: return sin(eval_node<T>(n.a, vars));
      case Op::Cos: return cos(eval_node<T>(n.a, vars));
      case Op::Tan: return tan(eval_node<T>(n.a, vars));
      case Op::Exp: return exp(eval_node<T>(n.a, vars));
      case Op::Log: return log(eval_node<T>(n.a, vars));
      case Op::Sqrt: return sqrt(eval_node<T>(n.a, vars));
      case Op::Abs: return abs(eval_node<T>(n.a, vars));
      case Op::Tanh: return tanh(eval_node<T>(n.a, vars));
    }
    return T(0);
  }

  friend class ExprParser;
  std::vector<Node> nodes_;
  int root_ = -1;
  std::vector<std::string> vars_;
  std::string text_;
};

}  // namespace minkdiff
