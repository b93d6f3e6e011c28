#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <string>

#include "sgt/error.hpp"

namespace sgt {

// Tiny symbolic expression for closed-form eigenvalues. Kept unevaluated so
// multiplicity bookkeeping never mixes rounded values.
class Expr {
 public:
  enum class Op { Rat, Value, Sqrt, CosPi, Add, Mul, Neg };

  Expr() : Expr(rat(0)) {}

  static Expr rat(long long num, long long den = 1) {
    if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
    if (den < 0) num = -num, den = -den;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
    auto n = std::make_shared<Node>(Op::Rat);
    n->num = num;
    n->den = den;
    return Expr(n);
  }
  // numeric leaf, for eigenvalues that are themselves character sums
  static Expr value(double v, std::string label = {}) {
    auto n = std::make_shared<Node>(Op::Value);
    n->v = v;
    n->label = std::move(label);
    return Expr(n);
  }
  static Expr sqrt(const Expr& a) { return unary(Op::Sqrt, a); }
  // cos(pi * num / den)
  static Expr cos_pi(long long num, long long den) {
    auto n = std::make_shared<Node>(Op::CosPi);
    n->num = num;
    n->den = den;
    return Expr(n);
  }

  Expr operator+(const Expr& b) const { return binary(Op::Add, *this, b); }
  Expr operator*(const Expr& b) const { return binary(Op::Mul, *this, b); }
  Expr operator-() const { return unary(Op::Neg, *this); }
  Expr operator-(const Expr& b) const { return *this + (-b); }

  double eval() const { return (double)eval_ld(*n_); }
  std::string str() const { return show(*n_); }
  bool is_rational() const { return n_->op == Op::Rat; }

 private:
  struct Node {
    explicit Node(Op o) : op(o) {}
    Op op;
    long long num = 0, den = 1;
    double v = 0;
    std::string label;
    std::shared_ptr<const Node> a, b;
  };
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  static Expr unary(Op op, const Expr& x) {
    auto n = std::make_shared<Node>(op);
    n->a = x.n_;
    return Expr(n);
  }
  static Expr binary(Op op, const Expr& x, const Expr& y) {
    // fold rational arithmetic so printed forms stay short
    if (x.is_rational() && y.is_rational()) {
      auto &p = *x.n_, &q = *y.n_;
      if (op == Op::Add) return rat(p.num * q.den + q.num * p.den, p.den * q.den);
      if (op == Op::Mul) return rat(p.num * q.num, p.den * q.den);
    }
    auto n = std::make_shared<Node>(op);
    n->a = x.n_;
    n->b = y.n_;
    return Expr(n);
  }

  static long double eval_ld(const Node& n) {
    switch (n.op) {
      case Op::Rat: return (long double)n.num / (long double)n.den;
      case Op::Value: return n.v;
      case Op::Sqrt: {
        long double x = eval_ld(*n.a);
        if (x < 0) {
          if (x > -1e-12L) return 0;
          fail(Errc::NoClosedForm, "square root of a negative quantity");
        }
        return std::sqrt(x);
      }
      case Op::CosPi: return std::cos(std::numbers::pi_v<long double> * n.num / n.den);
      case Op::Add: return eval_ld(*n.a) + eval_ld(*n.b);
      case Op::Mul: return eval_ld(*n.a) * eval_ld(*n.b);
      case Op::Neg: return -eval_ld(*n.a);
    }
    return 0;
  }

  static std::string show(const Node& n) {
    switch (n.op) {
      case Op::Rat: return n.den == 1 ? std::to_string(n.num) : std::to_string(n.num) + "/" + std::to_string(n.den);
      case Op::Value: return n.label.empty() ? std::to_string(n.v) : n.label;
      case Op::Sqrt: return "sqrt(" + show(*n.a) + ")";
      case Op::CosPi: return "cos(" + std::to_string(n.num) + "pi/" + std::to_string(n.den) + ")";
      case Op::Add: return "(" + show(*n.a) + " + " + show(*n.b) + ")";
      case Op::Mul: return show(*n.a) + "*" + show(*n.b);
      case Op::Neg: return "-" + show(*n.a);
    }
    return "?";
  }

  std::shared_ptr<const Node> n_;
};

}  // namespace sgt
